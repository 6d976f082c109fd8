#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "elast/closed_form.hpp"
#include "elast/ellipticity.hpp"
#include "elast/solver.hpp"
#include "elast/tensor.hpp"

namespace elast {

/// Raised for anything wrong with a material file; the message carries the
/// offending field or parse location.
struct MaterialError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// One named material. Exactly one of `parameters` / `voigt` is present:
/// parameters belong to a declared class tag, a raw Voigt matrix may be
/// declared with any tag or "auto".
struct MaterialRecord {
    std::string name;
    std::string symmetry;  // class tag or "auto"
    std::optional<std::vector<double>> parameters;
    std::optional<VoigtMatrix> voigt;
    std::optional<double> density;
    std::optional<std::string> units;
};

MaterialRecord parse_material(const nlohmann::json& j);
MaterialRecord load_material(const std::string& path);

/// Tensor plus the class driving closed forms. `declared` is the record's
/// class when parameters were given; `detected` is the pattern match.
struct BuiltMaterial {
    ElasticityTensor tensor;
    SymmetryClass working;   // used for spectra and checkers
    SymmetryClass detected;  // most specific pattern match
};

/// Builds the tensor and validates declared-tag consistency.
/// Throws MaterialError on contradictions.
BuiltMaterial build_material(const MaterialRecord& rec, double detect_tol);

struct MatchRow {
    std::string label;
    double closed_form;
    std::optional<double> numeric;
    std::optional<double> abs_diff;
};

struct SpectrumExtras {
    std::vector<MEigenpair> m;
    std::vector<ZEigenpair> z;
    std::vector<MatchRow> match;  // empty for the general class
    SolverConfig cfg;
};

struct Report {
    MaterialRecord material;
    BuiltMaterial built;
    bool has_closed_forms = false;
    std::string closed_form_reason;
    std::vector<LabeledEigenvalue> m_list;
    std::vector<LabeledEigenvalue> z_list;
    EllipticityVerdict verdict;
    PDVerdict pd;
    std::optional<WaveVelocities> waves;
    std::string waves_reason;
    std::optional<SpectrumExtras> numeric;
    std::optional<NumericMinimum> oracle;
    int oracle_grid_n = 0;
};

/// Closed forms, matching checker, definiteness, optional wave speeds.
Report analyze(const MaterialRecord& rec, double detect_tol,
               std::optional<double> density_override, const SolverConfig& cfg);

/// analyze() plus the numeric spectra and the closed-form match table.
Report analyze_spectrum(const MaterialRecord& rec, double detect_tol, const SolverConfig& cfg);

/// analyze() plus the grid/refined minimum record.
Report analyze_oracle(const MaterialRecord& rec, double detect_tol, const SolverConfig& cfg);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

/// Serialization with sorted keys and 17-significant-digit floats, so that
/// parse-then-dump is byte-identical.
std::string canonical_dump(const nlohmann::json& j);

/// Process exit code for a verdict: 0 elliptic, 1 not elliptic, 2 inconclusive.
int exit_code(Ellipticity status);

}  // namespace elast
