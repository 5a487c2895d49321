#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sharplab {

/// Pass/fail record for one axiom, lemma, theorem, or counterexample check.
/// A FAIL verdict always carries a replayable witness string.
struct CheckReport {
    std::string check_id;
    std::string paper_anchor;
    bool pass = true;
    std::string expected = "PASS";  // "PASS" or "FAIL"
    std::size_t probes = 0;
    std::optional<std::string> witness;

    std::string verdict() const { return pass ? "PASS" : "FAIL"; }
    bool as_expected() const { return verdict() == expected; }

    void fail(std::string w) {
        if (pass) {  // keep the first witness
            pass = false;
            witness = std::move(w);
        }
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["check_id"] = check_id;
        j["paper_anchor"] = paper_anchor;
        j["verdict"] = verdict();
        j["expected"] = expected;
        j["probes"] = probes;
        if (witness) j["witness"] = *witness;
        return j;
    }

    std::string text_line() const {
        std::string s = check_id + ": " + verdict();
        if (expected == "FAIL") s += pass ? " (UNEXPECTED: paper predicts FAIL)" : " (expected)";
        else if (!pass) s += " (UNEXPECTED)";
        if (witness) s += "\n    witness: " + *witness;
        return s;
    }
};

}  // namespace sharplab
