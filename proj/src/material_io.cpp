#include "elast/material_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace elast {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::vector<std::string> kKnownKeys = {"name", "symmetry", "parameters",
                                             "voigt",  "density", "units"};

}  // namespace

MaterialRecord parse_material(const json& j) {
    if (!j.is_object()) throw MaterialError("material file: top level must be an object");
    for (const auto& [key, _] : j.items()) {
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw MaterialError("material file: unknown key '" + key + "'");
    }
    MaterialRecord rec;
    if (!j.contains("symmetry") || !j["symmetry"].is_string())
        throw MaterialError("material file: field 'symmetry' (string) is required");
    rec.symmetry = j["symmetry"].get<std::string>();
    if (rec.symmetry != "auto") symmetry_from_name(rec.symmetry);  // validates the tag

    if (j.contains("name")) {
        if (!j["name"].is_string()) throw MaterialError("material file: 'name' must be a string");
        rec.name = j["name"].get<std::string>();
    }
    const bool has_params = j.contains("parameters");
    const bool has_voigt = j.contains("voigt");
    if (has_params == has_voigt)
        throw MaterialError("material file: exactly one of 'parameters'/'voigt' is required");

    if (has_params) {
        const json& p = j["parameters"];
        if (!p.is_array() || p.empty())
            throw MaterialError("material file: 'parameters' must be a non-empty array");
        std::vector<double> v;
        for (const json& x : p) {
            if (!x.is_number())
                throw MaterialError("material file: 'parameters' entries must be numbers");
            v.push_back(x.get<double>());
        }
        rec.parameters = std::move(v);
    } else {
        const json& m = j["voigt"];
        if (!m.is_array() || m.size() != 6)
            throw MaterialError("material file: 'voigt' must be a 6x6 array");
        VoigtMatrix vm;
        for (int a = 0; a < 6; ++a) {
            const json& row = m[a];
            if (!row.is_array() || row.size() != 6)
                throw MaterialError("material file: 'voigt' row " + std::to_string(a) +
                                    " must have 6 numbers");
            for (int b = 0; b < 6; ++b) {
                if (!row[b].is_number())
                    throw MaterialError("material file: 'voigt' entries must be numbers");
                vm.m[a][b] = row[b].get<double>();
            }
        }
        rec.voigt = vm;
    }

    if (j.contains("density")) {
        if (!j["density"].is_number())
            throw MaterialError("material file: 'density' must be a number");
        rec.density = j["density"].get<double>();
    }
    if (j.contains("units")) {
        if (!j["units"].is_string())
            throw MaterialError("material file: 'units' must be a string");
        rec.units = j["units"].get<std::string>();
    }
    return rec;
}

MaterialRecord load_material(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MaterialError("cannot open material file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw MaterialError("material file " + path + ": " + e.what());
    }
    return parse_material(j);
}

namespace {

/// Specificity containment: every pattern of `inner` also satisfies `outer`.
bool pattern_within(Symmetry inner, Symmetry outer) {
    if (inner == outer || outer == Symmetry::general) return true;
    switch (inner) {
        case Symmetry::isotropic: return true;
        case Symmetry::cubic:
            return outer == Symmetry::tetragonal || outer == Symmetry::orthotropic;
        case Symmetry::transverse_isotropic:
            return outer == Symmetry::tetragonal || outer == Symmetry::orthotropic;
        case Symmetry::tetragonal: return outer == Symmetry::orthotropic;
        default: return false;
    }
}

}  // namespace

BuiltMaterial build_material(const MaterialRecord& rec, double detect_tol) {
    BuiltMaterial out;
    if (rec.parameters) {
        if (rec.symmetry == "auto")
            throw MaterialError("material: 'auto' symmetry needs a 'voigt' matrix");
        SymmetryClass sc{symmetry_from_name(rec.symmetry), *rec.parameters};
        try {
            sc.validate();
            out.tensor = from_class(sc);
        } catch (const std::invalid_argument& e) {
            throw MaterialError(std::string("material: ") + e.what());
        }
        out.working = sc;
        out.detected = detect_class(out.tensor, detect_tol);
    } else {
        try {
            out.tensor = from_voigt(*rec.voigt);
        } catch (const std::invalid_argument& e) {
            throw MaterialError(std::string("material: ") + e.what());
        }
        out.detected = detect_class(out.tensor, detect_tol);
        if (rec.symmetry == "auto" || rec.symmetry == "general") {
            out.working = out.detected;
            if (rec.symmetry == "general") out.working = SymmetryClass::general();
        } else {
            const Symmetry declared = symmetry_from_name(rec.symmetry);
            if (!pattern_within(out.detected.tag, declared))
                throw MaterialError("material: declared symmetry '" + rec.symmetry +
                                    "' contradicts the matrix pattern (detected " +
                                    symmetry_name(out.detected.tag) + ")");
            out.working = out.detected.tag == declared
                              ? out.detected
                              : out.detected;  // most specific consistent class
        }
    }
    return out;
}

namespace {

Report base_report(const MaterialRecord& rec, double detect_tol,
                   std::optional<double> density_override, const SolverConfig& cfg) {
    Report r;
    r.material = rec;
    if (density_override) r.material.density = density_override;
    r.built = build_material(r.material, detect_tol);

    const SymmetryClass& sc = r.built.working;
    if (sc.tag != Symmetry::general) {
        r.has_closed_forms = true;
        r.m_list = m_eigenvalues(sc);
        r.z_list = z_eigenvalues(sc);
    } else {
        r.closed_form_reason = "closed forms are not available for the general class";
    }
    r.verdict = check_tensor(r.built.tensor, sc, cfg);
    r.pd = positive_definite(r.built.tensor);

    if (sc.tag == Symmetry::isotropic && r.material.density) {
        if (*r.material.density > 0.0 && sc.params[1] >= 0.0 &&
            sc.params[0] + 4.0 * sc.params[1] / 3.0 >= 0.0) {
            r.waves = wave_velocities(sc, *r.material.density);
        } else {
            r.waves_reason = "wave speeds undefined: negative modulus or density";
        }
    } else if (sc.tag == Symmetry::isotropic) {
        r.waves_reason = "no density given";
    } else {
        r.waves_reason = "wave speeds reported only for the isotropic class";
    }
    return r;
}

}  // namespace

Report analyze(const MaterialRecord& rec, double detect_tol,
               std::optional<double> density_override, const SolverConfig& cfg) {
    return base_report(rec, detect_tol, density_override, cfg);
}

Report analyze_spectrum(const MaterialRecord& rec, double detect_tol, const SolverConfig& cfg) {
    Report r = base_report(rec, detect_tol, std::nullopt, cfg);
    SpectrumExtras ex;
    ex.cfg = cfg;
    ex.m = m_spectrum(r.built.tensor, cfg);
    ex.z = z_spectrum(r.built.tensor, cfg);
    if (r.has_closed_forms) {
        for (const LabeledEigenvalue& e : r.m_list) {
            if (!e.value) continue;
            MatchRow row{e.label, *e.value, std::nullopt, std::nullopt};
            double best = std::numeric_limits<double>::infinity();
            for (const MEigenpair& p : ex.m) {
                const double d = std::fabs(p.theta - *e.value);
                if (d < best) {
                    best = d;
                    row.numeric = p.theta;
                    row.abs_diff = d;
                }
            }
            ex.match.push_back(std::move(row));
        }
    }
    r.numeric = std::move(ex);
    return r;
}

Report analyze_oracle(const MaterialRecord& rec, double detect_tol, const SolverConfig& cfg) {
    Report r = base_report(rec, detect_tol, std::nullopt, cfg);
    r.oracle = numeric_minimum(r.built.tensor, cfg);
    r.oracle_grid_n = cfg.grid_n;
    // the oracle's own sign verdict decides the exit status for this command
    r.verdict.status = r.oracle->status;
    r.verdict.mode = CheckMode::numeric;
    return r;
}

namespace {

json vec3_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json eigen_list_json(const std::vector<LabeledEigenvalue>& xs) {
    json arr = json::array();
    for (const auto& e : xs) {
        json o;
        o["label"] = e.label;
        o["degenerate"] = e.degenerate;
        o["value"] = e.value ? json(*e.value) : json(nullptr);
        arr.push_back(o);
    }
    return arr;
}

json material_json(const MaterialRecord& rec) {
    json o;
    o["name"] = rec.name;
    o["symmetry"] = rec.symmetry;
    if (rec.parameters) o["parameters"] = *rec.parameters;
    if (rec.voigt) {
        json m = json::array();
        for (int a = 0; a < 6; ++a) {
            json row = json::array();
            for (int b = 0; b < 6; ++b) row.push_back(rec.voigt->m[a][b]);
            m.push_back(row);
        }
        o["voigt"] = m;
    }
    o["density"] = rec.density ? json(*rec.density) : json(nullptr);
    o["units"] = rec.units ? json(*rec.units) : json(nullptr);
    return o;
}

}  // namespace

json report_to_json(const Report& r) {
    json o;
    o["material"] = material_json(r.material);
    o["detected_class"] = symmetry_name(r.built.detected.tag);
    o["working_class"] = symmetry_name(r.built.working.tag);
    if (!r.built.working.params.empty()) o["class_parameters"] = r.built.working.params;

    o["m_eigenvalues"] = r.has_closed_forms ? eigen_list_json(r.m_list) : json(nullptr);
    o["z_eigenvalues"] = r.has_closed_forms ? eigen_list_json(r.z_list) : json(nullptr);
    if (!r.has_closed_forms) o["closed_form_reason"] = r.closed_form_reason;

    json ell;
    ell["status"] = ellipticity_name(r.verdict.status);
    ell["mode"] = check_mode_name(r.verdict.mode);
    json fired = json::array();
    for (const Condition& c : r.verdict.fired) {
        json cf;
        cf["condition"] = c.label;
        cf["margin"] = c.margin;
        cf["satisfied"] = c.satisfied();
        fired.push_back(cf);
    }
    ell["fired"] = fired;
    o["ellipticity"] = ell;

    json pd;
    pd["positive_definite"] = r.pd.positive_definite;
    pd["min_eigenvalue"] = r.pd.min_eigenvalue;
    pd["spectrum"] = std::vector<double>(r.pd.spectrum.begin(), r.pd.spectrum.end());
    o["positive_definite"] = pd;

    if (r.waves) {
        json w;
        w["vp"] = r.waves->vp;
        w["vs"] = r.waves->vs;
        o["wave_velocities"] = w;
    } else {
        o["wave_velocities"] = nullptr;
        o["wave_velocities_reason"] = r.waves_reason;
    }

    if (r.numeric) {
        json n;
        n["starts"] = r.numeric->cfg.n_starts;
        n["seed"] = r.numeric->cfg.seed;
        n["tol"] = r.numeric->cfg.tol;
        json ms = json::array();
        for (const MEigenpair& p : r.numeric->m) {
            json e;
            e["theta"] = p.theta;
            e["x"] = vec3_json(p.x);
            e["y"] = vec3_json(p.y);
            e["residual"] = p.residual;
            e["iterations"] = p.iterations;
            e["branch"] = branch_name(p.branch);
            e["multiplicity"] = p.multiplicity;
            ms.push_back(e);
        }
        n["m_spectrum"] = ms;
        json zs = json::array();
        for (const ZEigenpair& p : r.numeric->z) {
            json e;
            e["eta"] = p.eta;
            e["x"] = vec3_json(p.x);
            e["residual"] = p.residual;
            e["multiplicity"] = p.multiplicity;
            zs.push_back(e);
        }
        n["z_spectrum"] = zs;
        if (!r.numeric->match.empty()) {
            json mt = json::array();
            for (const MatchRow& row : r.numeric->match) {
                json e;
                e["label"] = row.label;
                e["closed_form"] = row.closed_form;
                e["numeric"] = row.numeric ? json(*row.numeric) : json(nullptr);
                e["abs_diff"] = row.abs_diff ? json(*row.abs_diff) : json(nullptr);
                mt.push_back(e);
            }
            n["match_table"] = mt;
        }
        o["numeric"] = n;
    }

    if (r.oracle) {
        json g;
        g["grid_n"] = r.oracle_grid_n;
        g["grid_min"] = r.oracle->grid_min;
        g["grid_argmin_x"] = vec3_json(r.oracle->grid_x);
        g["grid_argmin_y"] = vec3_json(r.oracle->grid_y);
        g["refined_min"] = r.oracle->refined_min;
        g["refined_x"] = vec3_json(r.oracle->refined_x);
        g["refined_y"] = vec3_json(r.oracle->refined_y);
        g["band"] = r.oracle->band;
        g["status"] = ellipticity_name(r.oracle->status);
        o["oracle"] = g;
    }
    return o;
}

namespace {

void dump_canonical(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : j.items()) {  // nlohmann objects iterate sorted
                if (!first) out += ',';
                first = false;
                out += json(k).dump();
                out += ':';
                dump_canonical(v, out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_canonical(j[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += fmt17(j.get<double>());
            break;
        default:
            out += j.dump();
            break;
    }
}

std::string text_line(const std::string& k, const std::string& v) { return "  " + k + ": " + v + "\n"; }

}  // namespace

std::string canonical_dump(const json& j) {
    std::string out;
    dump_canonical(j, out);
    out += '\n';
    return out;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "material: " << (r.material.name.empty() ? "(unnamed)" : r.material.name) << "\n";
    os << text_line("declared symmetry", r.material.symmetry);
    os << text_line("detected class", symmetry_name(r.built.detected.tag));
    os << text_line("working class", symmetry_name(r.built.working.tag));
    if (r.material.units) os << text_line("units", *r.material.units);
    if (r.material.density) os << text_line("density", fmt17(*r.material.density));

    if (r.has_closed_forms) {
        os << "m-eigenvalues:\n";
        for (const auto& e : r.m_list)
            os << "  " << e.label << " = "
               << (e.value ? fmt17(*e.value) : std::string("degenerate")) << "\n";
        os << "z-eigenvalues:\n";
        for (const auto& e : r.z_list)
            os << "  " << e.label << " = "
               << (e.value ? fmt17(*e.value) : std::string("degenerate")) << "\n";
    } else {
        os << "closed forms: " << r.closed_form_reason << "\n";
    }

    os << "ellipticity: " << ellipticity_name(r.verdict.status) << " (mode "
       << check_mode_name(r.verdict.mode) << ")\n";
    for (const Condition& c : r.verdict.fired)
        os << "  [" << (c.satisfied() ? "ok" : "violated") << "] " << c.label
           << " margin " << fmt17(c.margin) << "\n";

    os << "positive definite: " << (r.pd.positive_definite ? "yes" : "no")
       << ", min eigenvalue " << fmt17(r.pd.min_eigenvalue) << "\n";
    os << "  mandel spectrum:";
    for (double v : r.pd.spectrum) os << " " << fmt17(v);
    os << "\n";

    if (r.waves)
        os << "wave velocities: vp " << fmt17(r.waves->vp) << ", vs " << fmt17(r.waves->vs)
           << "\n";
    else
        os << "wave velocities: " << r.waves_reason << "\n";

    if (r.numeric) {
        os << "numeric m-spectrum (" << r.numeric->m.size() << " values):\n";
        for (const MEigenpair& p : r.numeric->m)
            os << "  theta " << fmt17(p.theta) << "  residual " << fmt17(p.residual)
               << "  branch " << branch_name(p.branch) << "  multiplicity " << p.multiplicity
               << "\n";
        os << "numeric z-spectrum (" << r.numeric->z.size() << " values):\n";
        for (const ZEigenpair& p : r.numeric->z)
            os << "  eta " << fmt17(p.eta) << "  residual " << fmt17(p.residual) << "\n";
        if (!r.numeric->match.empty()) {
            os << "closed-form match table:\n";
            for (const MatchRow& row : r.numeric->match) {
                os << "  " << row.label << "  closed " << fmt17(row.closed_form) << "  numeric "
                   << (row.numeric ? fmt17(*row.numeric) : std::string("none")) << "  |diff| "
                   << (row.abs_diff ? fmt17(*row.abs_diff) : std::string("-")) << "\n";
            }
        }
    }

    if (r.oracle) {
        os << "oracle (grid " << r.oracle_grid_n << "):\n";
        os << text_line("grid min", fmt17(r.oracle->grid_min));
        os << "  grid argmin x: " << fmt17(r.oracle->grid_x[0]) << " "
           << fmt17(r.oracle->grid_x[1]) << " " << fmt17(r.oracle->grid_x[2]) << "\n";
        os << "  grid argmin y: " << fmt17(r.oracle->grid_y[0]) << " "
           << fmt17(r.oracle->grid_y[1]) << " " << fmt17(r.oracle->grid_y[2]) << "\n";
        os << text_line("refined min", fmt17(r.oracle->refined_min));
        os << text_line("band", fmt17(r.oracle->band));
        os << text_line("verdict", ellipticity_name(r.oracle->status));
    }
    return os.str();
}

int exit_code(Ellipticity status) {
    switch (status) {
        case Ellipticity::elliptic: return 0;
        case Ellipticity::not_elliptic: return 1;
        case Ellipticity::inconclusive: return 2;
    }
    return 2;
}

}  // namespace elast
