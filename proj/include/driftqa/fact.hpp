#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace driftqa {

enum class Verb { Move, Acquire, Discard, Transfer };

std::string_view verb_name(Verb v);
std::optional<Verb> verb_from_name(std::string_view name);

/// One world event. `index` is the 1-based position in the fact stream.
struct Fact {
    int index = 0;
    std::string subject;
    std::string verb_surface;
    Verb verb = Verb::Move;
    std::string object;
    std::string recipient;  // present iff verb == Transfer
    std::string sentence;

    bool has_recipient() const { return !recipient.empty(); }
};

/// Surface verb phrase -> canonical verb. Phrases are matched case-insensitively
/// and may span several words ("picked up"). The table is configuration: the
/// defaults cover the classic household-narrative verbs, and alternate surface
/// vocabularies load from a JSON file {"surface": "Move", ...}.
class VerbLexicon {
public:
    static VerbLexicon defaults();
    static VerbLexicon load_file(const std::string& path);
    static VerbLexicon from_json_text(std::string_view json_text);

    void add(std::string_view surface, Verb verb);
    std::optional<Verb> lookup(std::string_view surface) const;
    int max_phrase_words() const { return max_words_; }
    std::size_t size() const { return table_.size(); }

    /// Longest phrase in `tokens` starting at `pos` that the lexicon knows.
    /// Returns the word count of the match (0 = none) and sets `verb`.
    int match_at(const std::vector<std::string>& tokens, std::size_t pos, Verb& verb,
                 std::string& surface) const;

private:
    std::map<std::string, Verb> table_;  // keyed by lowercased phrase
    int max_words_ = 1;
};

/// Parses "<S> <verb> [to] the <O>" / "<S> <verb> the <O> to <R>".
/// Throws UnparsableSentence / UnknownVerb.
Fact parse_fact(std::string_view sentence, const VerbLexicon& lexicon, int index);

/// Renders the canonical sentence for a Fact (used when structured records
/// arrive without surface text and the fact must be woven into a stream).
std::string render_fact_sentence(const Fact& fact);

/// Fact streams load either as plain text (one sentence per line) or as
/// line-delimited JSON records {index, subject, verb, object, recipient?}.
/// Indices are renumbered to 1..n stream ordinals; input indices must be
/// strictly increasing.
std::vector<Fact> parse_fact_lines(const std::vector<std::string>& lines, const VerbLexicon& lexicon);
std::vector<Fact> load_facts(const std::string& path, const VerbLexicon& lexicon);

}  // namespace driftqa
