#pragma once

#include "cherednik/cohomology.hpp"
#include "cherednik_app/config.hpp"

#include <string>
#include <vector>

namespace cherednik::app {

enum class Status { Pass, Fail, Inapplicable };
std::string to_string(Status s);

struct Verdict {
    std::string id;
    Status status = Status::Inapplicable;
    std::vector<std::string> details;
};

/// Reported comparison that is never a gate.
struct Observation {
    std::string id;
    std::string module;
    bool observed = false;
    bool complete = false;
};

/// Verdicts accumulated by id in first-seen order. A verdict fails if any
/// contributing check failed, passes if at least one applied.
class VerdictSet {
public:
    void pass(const std::string& id);
    void fail(const std::string& id, const std::string& detail);
    void inapplicable(const std::string& id, const std::string& detail = {});
    /// f returns "" on success or a failure description. Exceptions other
    /// than CapExceeded count as failures.
    template <class F>
    void check(const std::string& id, const std::string& where, F&& f) {
        std::string r;
        try {
            r = f();
        } catch (const CapExceeded&) {
            throw;
        } catch (const std::exception& e) {
            r = std::string("exception: ") + e.what();
        }
        if (r.empty())
            pass(id);
        else
            fail(id, where.empty() ? r : where + ": " + r);
    }
    void merge(const VerdictSet& other);

    const std::vector<Verdict>& verdicts() const { return v_; }
    bool any_failed() const;
    const Verdict* find(const std::string& id) const;

private:
    std::vector<Verdict> v_;
    Verdict& slot(const std::string& id);
};

struct RunOutput {
    nlohmann::json report;
    VerdictSet verdicts;
    std::vector<Observation> observations;
};

/// Multiplicity table of a report, keyed by labels, restricted to r_window.
nlohmann::json report_json(const CohomologyReport& r, const std::optional<std::pair<long, long>>& window = std::nullopt);

/// Module named by the config (standard, simple, ltriv or baby Verma).
GradedModule build_module(const JobConfig& cfg, const Catalog& cat, const Params& p);

RunOutput run_task(const JobConfig& cfg);
/// The full acceptance matrix for one group at the configured parameters.
RunOutput verify_all(const JobConfig& cfg, const Catalog& cat);

/// Exit code for finished runs: 0 when nothing failed, 1 otherwise.
int exit_code(const RunOutput& out);
nlohmann::json final_report(const JobConfig& cfg, const RunOutput& out);
std::string render_text(const nlohmann::json& report);

}  // namespace cherednik::app
