#include "segline/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "segline/errors.hpp"
#include "segline/unicode.hpp"

namespace segline {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open file for writing: " + path.string());
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw Error("write failed: " + path.string());
    }
}

std::vector<std::u32string> split_on(std::u32string_view s, char32_t sep) {
    std::vector<std::u32string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

// Iterates lines of `text`, calling fn(line_number, line) for every
// non-comment line (including blank ones, which mark sentence breaks).
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        if (start == text.size()) {
            break;
        }
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++lineno;
        if (line.empty() || line[0] != '#') {
            fn(lineno, line);
        }
        start = end + 1;
    }
}

}  // namespace

SuperToken::SuperToken(std::u32string t, std::vector<std::size_t> b)
    : text(std::move(t)), boundaries(std::move(b)) {
    std::sort(boundaries.begin(), boundaries.end());
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
}

std::vector<std::u32string> SuperToken::subtokens() const {
    std::vector<std::u32string> parts;
    std::size_t start = 0;
    for (std::size_t b : boundaries) {
        parts.emplace_back(text.substr(start, b + 1 - start));
        start = b + 1;
    }
    parts.emplace_back(text.substr(start));
    return parts;
}

bool valid_boundaries(std::u32string_view text, std::span<const std::size_t> boundaries) {
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t b : boundaries) {
        if (text.size() < 2 || b >= text.size() - 1) {
            return false;
        }
        if (!first && b <= prev) {
            return false;
        }
        prev = b;
        first = false;
    }
    return true;
}

std::size_t Corpus::supertoken_count() const {
    std::size_t n = 0;
    for (const Sentence& s : sentences) {
        n += s.supertokens.size();
    }
    return n;
}

Corpus parse_segmentation_text(std::string_view text, std::string_view origin) {
    Corpus corpus;
    Sentence current;
    auto flush = [&] {
        if (!current.supertokens.empty()) {
            corpus.sentences.push_back(std::move(current));
            current = Sentence{};
        }
    };
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        if (line.empty()) {
            flush();
            return;
        }
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(std::string(origin), lineno, "expected <supertoken>\\t<segmentation>");
        }
        std::u32string token = utf8_decode(line.substr(0, tab));
        std::u32string seg = utf8_decode(line.substr(tab + 1));
        if (token.empty()) {
            throw ParseError(std::string(origin), lineno, "empty super-token");
        }
        std::vector<std::u32string> parts = split_on(seg, U'|');
        std::vector<std::size_t> boundaries;
        std::size_t pos = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const std::u32string& part = parts[k];
            if (part.empty() || token.compare(pos, part.size(), part) != 0) {
                throw ParseError(std::string(origin), lineno,
                                 "sub-tokens do not concatenate to super-token \"" +
                                     utf8_encode(token) + "\"");
            }
            pos += part.size();
            if (k + 1 < parts.size()) {
                boundaries.push_back(pos - 1);
            }
        }
        if (pos != token.size()) {
            throw ParseError(std::string(origin), lineno,
                             "sub-tokens do not concatenate to super-token \"" +
                                 utf8_encode(token) + "\"");
        }
        current.supertokens.push_back(SuperToken{std::move(token), std::move(boundaries)});
    });
    flush();
    return corpus;
}

Corpus parse_segmentation_file(const std::filesystem::path& path) {
    return parse_segmentation_text(read_file(path), path.string());
}

std::string serialize_corpus_text(const Corpus& corpus) {
    std::string out;
    for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
        if (s > 0) {
            out += '\n';
        }
        for (const SuperToken& token : corpus.sentences[s].supertokens) {
            out += utf8_encode(token.text);
            out += '\t';
            const std::vector<std::u32string> parts = token.subtokens();
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (k > 0) {
                    out += '|';
                }
                out += utf8_encode(parts[k]);
            }
            out += '\n';
        }
    }
    return out;
}

void serialize_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    write_file(path, serialize_corpus_text(corpus));
}

std::vector<std::size_t> convert_gold_analysis(std::u32string_view supertoken_text,
                                               std::span<const std::u32string> gold_subtokens) {
    if (supertoken_text.empty()) {
        throw Error("convert_gold_analysis: empty super-token");
    }
    std::vector<std::size_t> boundaries;
    std::size_t cursor = 0;
    for (const std::u32string& sub : gold_subtokens) {
        if (sub.empty()) {
            continue;
        }
        if (supertoken_text.compare(cursor, sub.size(), sub) == 0) {
            cursor += sub.size();
            if (cursor < supertoken_text.size()) {
                boundaries.push_back(cursor - 1);
            }
        }
        // else: inserted article or de-inflected form, dropped
    }
    if (cursor == 0) {
        throw UnalignableTokenError("no gold sub-token aligns with super-token \"" +
                                    utf8_encode(std::u32string(supertoken_text)) + "\"");
    }
    // Any tail left after the last match is one restored clitic; the boundary
    // before it was added when the preceding sub-token was consumed.
    return boundaries;
}

AnalyzedCorpus parse_analysis_text(std::string_view text, std::string_view origin) {
    AnalyzedCorpus corpus;
    std::vector<AnalyzedToken> current;
    auto flush = [&] {
        if (!current.empty()) {
            corpus.sentences.push_back(std::move(current));
            current.clear();
        }
    };
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        if (line.empty()) {
            flush();
            return;
        }
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw ParseError(std::string(origin), lineno, "expected <supertoken>\\t<analysis>");
        }
        AnalyzedToken token;
        token.text = utf8_decode(line.substr(0, tab));
        if (token.text.empty()) {
            throw ParseError(std::string(origin), lineno, "empty super-token");
        }
        std::u32string analysis = utf8_decode(line.substr(tab + 1));
        for (std::u32string& part : split_on(analysis, U' ')) {
            if (!part.empty()) {
                token.analysis.push_back(std::move(part));
            }
        }
        if (token.analysis.empty()) {
            throw ParseError(std::string(origin), lineno, "empty analysis column");
        }
        current.push_back(std::move(token));
    });
    flush();
    return corpus;
}

AnalyzedCorpus parse_analysis_file(const std::filesystem::path& path) {
    return parse_analysis_text(read_file(path), path.string());
}

Corpus convert_analyzed(const AnalyzedCorpus& input, ConversionStats* stats, std::ostream* log) {
    Corpus corpus;
    ConversionStats local;
    for (const auto& sentence : input.sentences) {
        Sentence out;
        for (const AnalyzedToken& token : sentence) {
            try {
                std::vector<std::size_t> boundaries =
                    convert_gold_analysis(token.text, token.analysis);
                out.supertokens.push_back(SuperToken{token.text, std::move(boundaries)});
                ++local.converted;
            } catch (const UnalignableTokenError& e) {
                ++local.unalignable;
                if (log != nullptr) {
                    *log << "unalignable token skipped: " << e.what() << '\n';
                }
            }
        }
        if (!out.supertokens.empty()) {
            corpus.sentences.push_back(std::move(out));
        }
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return corpus;
}

}  // namespace segline
