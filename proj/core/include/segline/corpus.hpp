#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segline {

/// A space-delimited orthographic unit together with the positions after
/// which it splits into sub-tokens. Boundary i means "split after character
/// i" (0-based); the final character can never carry a boundary.
struct SuperToken {
    std::u32string text;
    std::vector<std::size_t> boundaries;  // sorted, unique, each < text.size() - 1

    SuperToken() = default;
    SuperToken(std::u32string t, std::vector<std::size_t> b);

    /// Sub-token strings obtained by splitting text at the boundaries.
    std::vector<std::u32string> subtokens() const;

    bool operator==(const SuperToken&) const = default;
};

/// Checks the boundary invariants (sorted, unique, all < len-1).
bool valid_boundaries(std::u32string_view text, std::span<const std::size_t> boundaries);

struct Sentence {
    std::vector<SuperToken> supertokens;

    bool operator==(const Sentence&) const = default;
};

struct Corpus {
    std::vector<Sentence> sentences;

    std::size_t supertoken_count() const;
    bool operator==(const Corpus&) const = default;
};

/// Reads a segmentation file: one "<supertoken>\t<sub1>|<sub2>|..." per line,
/// blank line between sentences, '#'-prefixed lines ignored. Throws
/// ParseError when the sub-tokens do not concatenate to the super-token.
Corpus parse_segmentation_file(const std::filesystem::path& path);
Corpus parse_segmentation_text(std::string_view text, std::string_view origin = "<string>");

/// Inverse of parse_segmentation_file; emits the canonical form (LF line
/// endings, no comments) so serialize(parse(serialize(c))) is byte-identical.
void serialize_corpus(const Corpus& corpus, const std::filesystem::path& path);
std::string serialize_corpus_text(const Corpus& corpus);

/// Reduces a morphologically analyzed token to pure boundary positions.
/// Gold sub-tokens are aligned left to right: a sub-token matching the text
/// at the cursor consumes it (adding a boundary unless it ends the token);
/// non-matching sub-tokens (inserted articles, de-inflected base forms) are
/// dropped; a leftover tail becomes a single restored clitic. Throws
/// UnalignableTokenError when no sub-token matches at all, since the
/// restored clitic would then need a boundary before position 0.
std::vector<std::size_t> convert_gold_analysis(std::u32string_view supertoken_text,
                                               std::span<const std::u32string> gold_subtokens);

/// One token of morphologically analyzed input: the surface form plus the
/// ordered gold analysis sub-tokens (which may include inserted material).
struct AnalyzedToken {
    std::u32string text;
    std::vector<std::u32string> analysis;
};

struct AnalyzedCorpus {
    std::vector<std::vector<AnalyzedToken>> sentences;
};

/// Reads analyzed data: "<supertoken>\t<sub1> <sub2> ..." per line, blank
/// line between sentences, '#' comments.
AnalyzedCorpus parse_analysis_file(const std::filesystem::path& path);
AnalyzedCorpus parse_analysis_text(std::string_view text, std::string_view origin = "<string>");

struct ConversionStats {
    std::size_t converted = 0;
    std::size_t unalignable = 0;
};

/// Applies convert_gold_analysis to every token; unalignable tokens are
/// logged to `log` (when given) and excluded from the result.
Corpus convert_analyzed(const AnalyzedCorpus& input, ConversionStats* stats = nullptr,
                        std::ostream* log = nullptr);

}  // namespace segline
