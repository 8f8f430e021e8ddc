#pragma once

#include "xmodcat/document.hpp"
#include "xmodcat/objects.hpp"
#include "xmodcat/premodular.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>

namespace xmodcat {

struct AnalysisOptions {
    int jobs = 1;
    // Explicit-object checks run in `verify` when |X1||X2| is at most this
    // bound; above it they are reported as skipped.
    std::int64_t object_check_bound = 36;
};

// Owns the crossed module and computes the pipeline stages on demand, each at
// most once. Stage wall-clock times are collected for the report.
class Analysis {
public:
    explicit Analysis(CrossedModule xm, AnalysisOptions options = {});

    // Computed characters point back into the owned crossed module.
    Analysis(const Analysis&) = delete;
    Analysis& operator=(const Analysis&) = delete;

    const CrossedModule& xmod() const { return xm_; }
    const AnalysisOptions& options() const { return options_; }

    const ValidationReport& validation();
    bool valid() { return validation().pass(); }
    const ExactnessData& exact();
    const Irreducibles& irreducible_set();
    const ModularData& modular();
    const FusionTensor& fusion();
    const VacuumReport& vacuum();

    // Identity suite plus (optionally) the explicit-object checks.
    VerificationReport verify(bool with_objects);

    const std::map<std::string, double>& timing_seconds() const { return timing_; }

private:
    void require_validity();

    CrossedModule xm_;
    AnalysisOptions options_;
    std::optional<ValidationReport> validation_;
    std::optional<ExactnessData> exact_;
    std::optional<Irreducibles> irr_;
    std::optional<ModularData> modular_;
    std::optional<FusionTensor> fusion_;
    std::optional<VacuumReport> vacuum_;
    std::map<std::string, double> timing_;
};

// Explicit-object verification entries: canonical-object axioms, dimension
// and character-trace consistency, direct sums, tensor characters, braiding
// invertibility/intertwining for all pairs from {1, R, 0}, plus the
// recorded-only braid-relation probe.
VerificationReport object_checks(const CrossedModule& x, const ExactnessData& e);

namespace json_io {

nlohmann::json cyclotomic_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json validation_json(const ValidationReport& r);
nlohmann::json exactness_json(const ExactnessData& e);
nlohmann::json irreducibles_json(const Irreducibles& irr, const CrossedModule& x);
nlohmann::json modular_json(const ModularData& md);
nlohmann::json fusion_json(const FusionTensor& f);
nlohmann::json vacuum_json(const VacuumReport& v);
nlohmann::json verify_json(const VerificationReport& r);

// The full report; `document_echo` is the parsed input document.
nlohmann::json report_json(Analysis& analysis, const nlohmann::json& document_echo,
                           bool with_objects);

std::string fusion_csv(const FusionTensor& f);

}  // namespace json_io

}  // namespace xmodcat
