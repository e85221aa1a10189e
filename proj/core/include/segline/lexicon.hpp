#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segline {

/// Maps a source tagset onto coarse Universal-POS-style tags. Unknown
/// sources map to "X"; sources flagged complex map to "CPLX" plus the
/// first letter of the target (e.g. NOUN -> CPLXN).
struct TagMap {
    struct Rule {
        std::string target;
        bool complex = false;

        bool operator==(const Rule&) const = default;
    };

    std::map<std::string, Rule> rules;

    std::string apply(const std::string& source) const;

    /// TSV "source\ttarget" with an optional third column "CPLX".
    static TagMap load(const std::filesystem::path& path);
};

/// Inflected-form lexicon: surface form -> set of coarse POS tags.
/// Immutable once built; expansion produces a new value.
class Lexicon {
public:
    static constexpr std::string_view kMiss = "_";

    /// Inserts (form, tag); duplicate pairs collapse.
    void add(const std::u32string& form, const std::string& tag);

    /// All tags for `form`, sorted and joined with '|'; "_" when the form
    /// is absent or empty.
    std::string lookup(std::u32string_view form) const;
    std::string lookup(std::string_view utf8_form) const;

    bool contains(std::u32string_view form) const;
    const std::set<std::string>* tags(std::u32string_view form) const;

    /// Number of distinct surface forms.
    std::size_t form_count() const { return entries_.size(); }
    /// Number of (form, tag) pairs.
    std::size_t entry_count() const;

    /// Forms in code-point order, for deterministic serialization.
    std::vector<const std::u32string*> sorted_forms() const;

private:
    struct Hash {
        using is_transparent = void;
        std::size_t operator()(std::u32string_view s) const {
            return std::hash<std::u32string_view>{}(s);
        }
    };
    struct Eq {
        using is_transparent = void;
        bool operator()(std::u32string_view a, std::u32string_view b) const { return a == b; }
    };

    std::unordered_map<std::u32string, std::set<std::string>, Hash, Eq> entries_;
};

/// Loads a TSV lexicon "form\ttag", passing every tag through the map.
Lexicon load_lexicon(const std::filesystem::path& path, const TagMap& tagmap);
/// Loads with tags taken verbatim (for already-coarse lexicons, e.g. the
/// output of expand_lexicon).
Lexicon load_lexicon(const std::filesystem::path& path);

/// Writes the lexicon as sorted TSV "form\ttag" lines.
void save_lexicon(const Lexicon& lex, const std::filesystem::path& path);

/// Hebrew proclitics w,h,b,l,k,m,š plus the two-letter w-combinations.
std::set<std::u32string> default_prefix_particles();

inline const std::set<std::string>& default_nominal_tags() {
    static const std::set<std::string> kTags = {"ADJ", "NOUN", "PROPN"};
    return kTags;
}

/// Adds each candidate name with tag PROPN unless it decomposes as
/// particle + form that the base lexicon attests with a nominal tag
/// (such a name would mask a genuine proclitic segmentation).
Lexicon expand_lexicon(const Lexicon& base, std::span<const std::u32string> names,
                       const std::set<std::u32string>& prefix_particles = default_prefix_particles(),
                       const std::set<std::string>& nominal_tags = default_nominal_tags());

/// Name-list file: whitespace-separated name tokens, one name per line.
std::vector<std::u32string> load_name_list(const std::filesystem::path& path);

}  // namespace segline
