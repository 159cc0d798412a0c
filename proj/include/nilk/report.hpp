#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nilk {

enum class CheckStatus { Pass, Fail, Discrepancy };

inline const char *to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Discrepancy:
        return "discrepancy";
    }
    return "?";
}

/// One named assertion. A discrepancy is a mismatch between a computed value
/// and a published display that is known and reported rather than fatal.
struct Check {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::Pass;
    std::string computed;
    std::string expected;
    nlohmann::json detail; // e.g. both matrices of a discrepancy
};

class VerificationReport {
public:
    void add(Check c) {
        if (std::any_of(checks_.begin(), checks_.end(), [&](const Check &o) { return o.id == c.id; }))
            throw std::logic_error("duplicate report id " + c.id);
        checks_.push_back(std::move(c));
    }

    void expect(std::string id, std::string anchor, bool ok, std::string computed = {}, std::string expected = {}) {
        add({std::move(id), std::move(anchor), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(computed),
             std::move(expected), nullptr});
    }

    /// Pass when equal, otherwise a discrepancy carrying both sides.
    void compare_display(std::string id, std::string anchor, bool equal, std::string computed, std::string expected,
                         nlohmann::json detail = nullptr) {
        add({std::move(id), std::move(anchor), equal ? CheckStatus::Pass : CheckStatus::Discrepancy,
             std::move(computed), std::move(expected), std::move(detail)});
    }

    void append(const VerificationReport &other) {
        for (const auto &c : other.checks_)
            add(c);
    }

    const std::vector<Check> &checks() const { return checks_; }

    const Check *find(std::string_view id) const {
        auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check &c) { return c.id == id; });
        return it == checks_.end() ? nullptr : &*it;
    }

    std::size_t count(CheckStatus s) const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [s](const Check &c) { return c.status == s; }));
    }

    bool passed(bool allow_discrepancies) const {
        return count(CheckStatus::Fail) == 0 && (allow_discrepancies || count(CheckStatus::Discrepancy) == 0);
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &c : checks_) {
            nlohmann::json j = {{"id", c.id},
                                {"anchor", c.anchor},
                                {"status", to_string(c.status)},
                                {"computed", c.computed},
                                {"expected", c.expected}};
            if (!c.detail.is_null())
                j["detail"] = c.detail;
            arr.push_back(std::move(j));
        }
        return {{"checks", arr},
                {"summary",
                 {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"discrepancy", count(CheckStatus::Discrepancy)}}}};
    }

    std::string to_text() const {
        std::string out;
        for (const auto &c : checks_) {
            std::string tag = c.status == CheckStatus::Pass   ? "[pass]       "
                              : c.status == CheckStatus::Fail ? "[FAIL]       "
                                                              : "[discrepancy]";
            out += tag + " " + c.id + "  (" + c.anchor + ")\n";
            if (c.status != CheckStatus::Pass) {
                out += "    computed: " + c.computed + "\n";
                out += "    expected: " + c.expected + "\n";
            }
        }
        out += std::to_string(count(CheckStatus::Pass)) + " passed, " + std::to_string(count(CheckStatus::Fail)) +
               " failed, " + std::to_string(count(CheckStatus::Discrepancy)) + " discrepancies\n";
        return out;
    }

private:
    std::vector<Check> checks_;
};

} // namespace nilk
