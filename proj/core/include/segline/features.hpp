#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "segline/corpus.hpp"
#include "segline/lexicon.hpp"

namespace segline {

/// Feature-group switches and alphabets for the character-window extractor.
/// Disabled groups still emit their slots with neutral values so vector
/// arity never changes.
struct FeatureConfig {
    int window = 2;  // characters of context on each side; the slot layout caps this at 2

    bool use_letters = true;    // character identity slots
    bool use_vowels = true;     // vocalic-letter flags
    bool use_lexicon = true;    // lexicon lookup slots
    bool use_expansion = true;  // proper-name lexicon expansion (selects the lexicon upstream)
    bool use_lengths = true;
    bool use_position = true;
    bool use_frequency = true;

    std::set<char32_t> vowel_letters = {U'\'', U'h', U'w', U'y'};
    std::set<char32_t> punct_alphabet = {U'"', U'-', U'%', U'\'', U'.', U'?', U'!', U'/'};

    void validate() const;  // throws ConfigError

    bool operator==(const FeatureConfig&) const = default;
};

inline constexpr std::size_t kFeatureSlots = 34;
inline constexpr std::size_t kCategoricalSlots = 24;
inline constexpr std::size_t kNumericSlots = 10;
inline constexpr std::size_t kLexiconSlots = 15;

/// Numeric lengths/positions clamp here to bound the ordinal range.
inline constexpr double kLengthCap = 30.0;

/// Slot layout, in logical order:
///   0..4   character identity at offsets -2..+2
///   5..8   prev_first, prev_last, next_first, next_last
///   9..13  vowel flags at offsets -2..+2
///   14..28 lexicon lookups (Table order: whole, so-far, remaining,
///          remain-from-1, remain-from-2, from-4..from-1, to+1..to+4,
///          prev token, next token)
///   29..33 len_prev, len_cur, len_next, char_position, freq_ratio
std::string_view feature_slot_name(std::size_t slot);
bool feature_slot_is_categorical(std::size_t slot);

/// One observation for a classifiable character position. Categorical
/// slots hold an alphabet symbol or tag-string ("_" for miss/overflow);
/// numeric slots hold vowel flags (0/1), lengths, position and the
/// frequency ratio, in the layout above.
struct FeatureVector {
    std::array<std::string, kCategoricalSlots> cat;
    std::array<double, kNumericSlots> num{};

    bool operator==(const FeatureVector&) const = default;
};

/// Identity for Hebrew-block letters and the configured punctuation set;
/// every other character (Latin, digits, OOV symbols) becomes "_".
std::string normalize_char(char32_t c, const FeatureConfig& config);

/// The 15 lexicon lookups for target position i (0-based, i < len-1) of
/// `supertoken`, with `prev`/`next` the raw neighbor strings (empty when
/// the neighbor does not exist). Ranges that leave the super-token yield
/// "_" without lookup.
std::array<std::string, kLexiconSlots> lookup_window(const Lexicon& lex,
                                                     std::u32string_view supertoken,
                                                     std::size_t i, std::u32string_view prev,
                                                     std::u32string_view next);

/// Word-frequency counts; absent forms count as zero.
struct FrequencyTable {
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

    std::unordered_map<std::u32string, std::uint64_t, Hash, Eq> counts;

    std::uint64_t count(std::u32string_view form) const;
    void set(const std::u32string& form, std::uint64_t n) { counts[form] = n; }

    /// TSV "form\tcount".
    static FrequencyTable load(const std::filesystem::path& path);
};

/// Add-one-smoothed ratio (c(left)+1)(c(right)+1)/(c(whole)+1) for the
/// split after position i.
double freq_ratio(const FrequencyTable& freqs, std::u32string_view supertoken, std::size_t i);

/// Full 34-slot vector for character i of super-token t in the sentence.
/// Throws std::out_of_range for invalid (t, i).
FeatureVector extract(const Sentence& sentence, std::size_t t, std::size_t i, const Lexicon& lex,
                      const FrequencyTable& freqs, const FeatureConfig& config);

}  // namespace segline
