#include "segline/lexicon.hpp"

#include <algorithm>
#include <fstream>

#include "segline/errors.hpp"
#include "segline/unicode.hpp"

namespace segline {

namespace {

// Calls fn(lineno, line) for every non-empty line.
template <typename Fn>
void for_each_tsv_line(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open file: " + path.string());
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        fn(lineno, line);
    }
}

}  // namespace

std::string TagMap::apply(const std::string& source) const {
    auto it = rules.find(source);
    if (it == rules.end()) {
        return "X";
    }
    const Rule& rule = it->second;
    if (rule.complex) {
        // First Unicode character of the base tag; tags are ASCII in
        // practice but keep this correct for any input.
        std::u32string target = utf8_decode(rule.target);
        return "CPLX" + (target.empty() ? std::string() : utf8_encode(target[0]));
    }
    return rule.target;
}

TagMap TagMap::load(const std::filesystem::path& path) {
    TagMap map;
    for_each_tsv_line(path, [&](std::size_t lineno, const std::string& line) {
        std::size_t tab1 = line.find('\t');
        if (tab1 == std::string::npos || tab1 == 0) {
            throw ParseError(path.string(), lineno, "expected <source>\\t<target>[\\tCPLX]");
        }
        std::size_t tab2 = line.find('\t', tab1 + 1);
        Rule rule;
        std::string source = line.substr(0, tab1);
        if (tab2 == std::string::npos) {
            rule.target = line.substr(tab1 + 1);
        } else {
            rule.target = line.substr(tab1 + 1, tab2 - tab1 - 1);
            std::string marker = line.substr(tab2 + 1);
            if (marker != "CPLX") {
                throw ParseError(path.string(), lineno, "unknown marker column \"" + marker + "\"");
            }
            rule.complex = true;
        }
        if (rule.target.empty()) {
            throw ParseError(path.string(), lineno, "empty target tag");
        }
        map.rules[source] = std::move(rule);
    });
    return map;
}

void Lexicon::add(const std::u32string& form, const std::string& tag) {
    entries_[form].insert(tag);
}

std::string Lexicon::lookup(std::u32string_view form) const {
    if (form.empty()) {
        return std::string(kMiss);
    }
    auto it = entries_.find(form);
    if (it == entries_.end()) {
        return std::string(kMiss);
    }
    std::string out;
    for (const std::string& tag : it->second) {
        if (!out.empty()) {
            out += '|';
        }
        out += tag;
    }
    return out;
}

std::string Lexicon::lookup(std::string_view utf8_form) const {
    return lookup(std::u32string_view(utf8_decode(utf8_form)));
}

bool Lexicon::contains(std::u32string_view form) const {
    return entries_.find(form) != entries_.end();
}

const std::set<std::string>* Lexicon::tags(std::u32string_view form) const {
    auto it = entries_.find(form);
    return it == entries_.end() ? nullptr : &it->second;
}

std::size_t Lexicon::entry_count() const {
    std::size_t n = 0;
    for (const auto& [form, tags] : entries_) {
        n += tags.size();
    }
    return n;
}

std::vector<const std::u32string*> Lexicon::sorted_forms() const {
    std::vector<const std::u32string*> forms;
    forms.reserve(entries_.size());
    for (const auto& [form, tags] : entries_) {
        forms.push_back(&form);
    }
    std::sort(forms.begin(), forms.end(),
              [](const std::u32string* a, const std::u32string* b) { return *a < *b; });
    return forms;
}

namespace {

Lexicon load_lexicon_impl(const std::filesystem::path& path, const TagMap* tagmap) {
    Lexicon lex;
    for_each_tsv_line(path, [&](std::size_t lineno, const std::string& line) {
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
            throw ParseError(path.string(), lineno, "expected <form>\\t<tag>");
        }
        std::u32string form = utf8_decode(std::string_view(line).substr(0, tab));
        std::string tag = line.substr(tab + 1);
        lex.add(form, tagmap != nullptr ? tagmap->apply(tag) : tag);
    });
    return lex;
}

}  // namespace

Lexicon load_lexicon(const std::filesystem::path& path, const TagMap& tagmap) {
    return load_lexicon_impl(path, &tagmap);
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    return load_lexicon_impl(path, nullptr);
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open file for writing: " + path.string());
    }
    for (const std::u32string* form : lex.sorted_forms()) {
        const std::string utf8 = utf8_encode(*form);
        for (const std::string& tag : *lex.tags(*form)) {
            out << utf8 << '\t' << tag << '\n';
        }
    }
    if (!out) {
        throw Error("write failed: " + path.string());
    }
}

std::set<std::u32string> default_prefix_particles() {
    std::set<std::u32string> particles;
    const std::u32string singles = U"whblkmš";  // š
    for (char32_t c : singles) {
        particles.insert(std::u32string(1, c));
    }
    for (char32_t c : singles.substr(1)) {
        particles.insert(std::u32string{U'w', c});
    }
    return particles;
}

Lexicon expand_lexicon(const Lexicon& base, std::span<const std::u32string> names,
                       const std::set<std::u32string>& prefix_particles,
                       const std::set<std::string>& nominal_tags) {
    Lexicon expanded = base;
    for (const std::u32string& name : names) {
        if (name.empty()) {
            continue;
        }
        bool spurious = false;
        for (const std::u32string& particle : prefix_particles) {
            if (name.size() <= particle.size() ||
                name.compare(0, particle.size(), particle) != 0) {
                continue;
            }
            // Candidate reading: particle + remainder attested as a nominal.
            const std::set<std::string>* tags =
                base.tags(std::u32string_view(name).substr(particle.size()));
            if (tags != nullptr) {
                spurious = std::any_of(tags->begin(), tags->end(), [&](const std::string& t) {
                    return nominal_tags.count(t) > 0;
                });
            }
            if (spurious) {
                break;
            }
        }
        if (!spurious) {
            expanded.add(name, "PROPN");
        }
    }
    return expanded;
}

std::vector<std::u32string> load_name_list(const std::filesystem::path& path) {
    std::vector<std::u32string> names;
    for_each_tsv_line(path, [&](std::size_t, const std::string& line) {
        std::u32string decoded = utf8_decode(line);
        std::u32string token;
        for (char32_t c : decoded) {
            if (c == U' ' || c == U'\t') {
                if (!token.empty()) {
                    names.push_back(std::move(token));
                    token.clear();
                }
            } else {
                token.push_back(c);
            }
        }
        if (!token.empty()) {
            names.push_back(std::move(token));
        }
    });
    return names;
}

}  // namespace segline
