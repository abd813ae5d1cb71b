#ifndef LOOPDEC_CORPUS_HPP
#define LOOPDEC_CORPUS_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace loopdec {

/* One golden fixture: the question (input), the answer as the named oracle
 * produced it (expected), and bookkeeping (meta). The values are rebuilt
 * from the oracle on every pass; files on disk are a cache whose bytes must
 * match the rebuild exactly. */
struct Fixture {
    std::string module;
    std::string id;
    std::string oracle;
    int certified_cutoff;
    nlohmann::json input;
    nlohmann::json expected;

    std::string dir(const std::string& root) const { return root + "/" + module + "/" + id; }
    nlohmann::json meta() const;
};

/* The whole fixture set, regenerated from the oracles on each call. */
std::vector<Fixture> corpus_fixtures();

/* Serialization used for every corpus file, so byte comparisons are
 * well defined. */
std::string render_json(const nlohmann::json& j);

/* Write (or overwrite) input.json, expected.json, and meta.json for every
 * fixture under root. Returns the number of fixtures written. */
int write_corpus(const std::string& root);

struct CorpusIssue {
    std::string fixture;  // "<module>/<id>"
    std::string message;
};

/* Outcome of a corpus pass. input_issues are missing or unreadable files
 * (the tree needs a regen); mismatch_issues are stale golden bytes or a
 * main-path result that disagrees with its oracle (the code is wrong, or
 * someone edited a golden file by hand). */
struct CorpusReport {
    int fixtures_checked = 0;
    std::vector<CorpusIssue> input_issues;
    std::vector<CorpusIssue> mismatch_issues;
    bool ok() const { return input_issues.empty() && mismatch_issues.empty(); }
};

/* For every fixture: compare the three files on disk byte for byte against
 * the regenerated serialization, then recompute the expected values along
 * the main code path and compare against the oracle's answer. */
CorpusReport check_corpus(const std::string& root);

}  // namespace loopdec

#endif
