#ifndef FANOLINK_REPORT_HPP
#define FANOLINK_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace fanolink {

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}
inline CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    return CheckStatus::skipped;
}

struct CheckEntry {
    std::string check_id;
    std::string paper_anchor;  // verbatim formula fragment the check certifies
    CheckStatus status = CheckStatus::pass;
    std::string lhs;
    std::string rhs;
    std::string witness;  // optional canonical polynomial text

    friend bool operator==(const CheckEntry& a, const CheckEntry& b) {
        return a.check_id == b.check_id && a.paper_anchor == b.paper_anchor &&
               a.status == b.status && a.lhs == b.lhs && a.rhs == b.rhs && a.witness == b.witness;
    }
};

/// Per-check records with deterministic ordering by check_id.
class VerificationReport {
public:
    void add(CheckEntry e) { entries_.push_back(std::move(e)); }
    void check(const std::string& id, const std::string& anchor, bool ok,
               const std::string& lhs = "", const std::string& rhs = "",
               const std::string& witness = "") {
        add({id, anchor, ok ? CheckStatus::pass : CheckStatus::fail, lhs, rhs, witness});
    }
    void skip(const std::string& id, const std::string& anchor, const std::string& note = "") {
        add({id, anchor, CheckStatus::skipped, note, "", ""});
    }
    void merge(const VerificationReport& o) {
        entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
    }
    void sort_by_id() {
        std::stable_sort(entries_.begin(), entries_.end(),
                         [](const CheckEntry& a, const CheckEntry& b) { return a.check_id < b.check_id; });
    }

    const std::vector<CheckEntry>& entries() const { return entries_; }
    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& e : entries_)
            if (e.status == s) ++n;
        return n;
    }
    bool all_passed() const { return count(CheckStatus::fail) == 0; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries_) {
            nlohmann::ordered_json je;
            je["check_id"] = e.check_id;
            je["paper_anchor"] = e.paper_anchor;
            je["status"] = to_string(e.status);
            je["lhs"] = e.lhs;
            je["rhs"] = e.rhs;
            if (!e.witness.empty()) je["witness"] = e.witness;
            j["entries"].push_back(je);
        }
        j["summary"] = {{"pass", count(CheckStatus::pass)},
                        {"fail", count(CheckStatus::fail)},
                        {"skipped", count(CheckStatus::skipped)}};
        return j;
    }

    static VerificationReport from_json(const nlohmann::json& j) {
        VerificationReport r;
        for (const auto& je : j.at("entries")) {
            CheckEntry e;
            e.check_id = je.at("check_id").get<std::string>();
            e.paper_anchor = je.at("paper_anchor").get<std::string>();
            e.status = status_from_string(je.at("status").get<std::string>());
            e.lhs = je.at("lhs").get<std::string>();
            e.rhs = je.at("rhs").get<std::string>();
            if (je.contains("witness")) e.witness = je.at("witness").get<std::string>();
            r.add(e);
        }
        return r;
    }

private:
    std::vector<CheckEntry> entries_;
};

}  // namespace fanolink

#endif
