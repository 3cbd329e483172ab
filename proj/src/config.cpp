#include "cloudsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cloudsim/field.hpp"
#include "cloudsim/io.hpp"

namespace cloudsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

struct RawConfig {
    // section -> key -> (value, line number)
    std::map<std::string, std::map<std::string, std::pair<std::string, int>>>
        data;
    std::string origin;

    [[noreturn]] void fail(const std::string& what, int line = 0) const {
        std::ostringstream ss;
        ss << origin;
        if (line > 0) ss << ":" << line;
        ss << ": " << what;
        throw ConfigError(ss.str());
    }
};

RawConfig parse_raw(const std::string& text, const std::string& origin) {
    RawConfig raw;
    raw.origin = origin;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t cpos = line.find_first_of("#;");
        if (cpos != std::string::npos) line.erase(cpos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') raw.fail("malformed section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) raw.fail("empty section name", lineno);
            raw.data[section];  // allow empty sections
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) raw.fail("expected key = value", lineno);
        if (section.empty()) raw.fail("key before any [section]", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) raw.fail("empty key", lineno);
        auto& sec = raw.data[section];
        if (sec.count(key)) raw.fail("duplicate key '" + key + "'", lineno);
        sec[key] = {value, lineno};
    }
    return raw;
}

/// Typed access with consumption tracking, so leftovers can be rejected.
class SectionReader {
public:
    SectionReader(RawConfig& raw, const std::string& name) : raw_(raw), name_(name) {
        auto it = raw.data.find(name);
        if (it != raw.data.end()) entries_ = &it->second;
    }

    std::optional<std::string> get(const std::string& key) {
        if (!entries_) return std::nullopt;
        auto it = entries_->find(key);
        if (it == entries_->end()) return std::nullopt;
        used_.insert(key);
        return it->second.first;
    }

    void str(const std::string& key, std::string& out) {
        if (auto v = get(key)) out = *v;
    }
    void num(const std::string& key, double& out) {
        if (auto v = get(key)) out = to_double(key, *v);
    }
    void integer(const std::string& key, int& out) {
        if (auto v = get(key)) {
            const double d = to_double(key, *v);
            if (d != std::floor(d))
                fail(key, "expected an integer, got '" + *v + "'");
            out = static_cast<int>(d);
        }
    }
    void boolean(const std::string& key, bool& out) {
        if (auto v = get(key)) {
            if (*v == "true" || *v == "1")
                out = true;
            else if (*v == "false" || *v == "0")
                out = false;
            else
                fail(key, "expected true/false, got '" + *v + "'");
        }
    }
    void int_list(const std::string& key, std::vector<int>& out) {
        if (auto v = get(key)) {
            out.clear();
            std::istringstream is(*v);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                tok = trim(tok);
                if (tok.empty()) continue;
                out.push_back(static_cast<int>(to_double(key, tok)));
            }
        }
    }

    void finish() {
        if (!entries_) return;
        for (const auto& [key, val] : *entries_)
            if (!used_.count(key))
                raw_.fail("unknown key '" + key + "' in [" + name_ + "]",
                          val.second);
    }

    [[noreturn]] void fail(const std::string& key, const std::string& what) {
        int line = 0;
        if (entries_) {
            auto it = entries_->find(key);
            if (it != entries_->end()) line = it->second.second;
        }
        raw_.fail("[" + name_ + "] " + key + ": " + what, line);
    }

private:
    double to_double(const std::string& key, const std::string& v) {
        try {
            std::size_t pos = 0;
            const double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            fail(key, "expected a number, got '" + v + "'");
        }
    }

    RawConfig& raw_;
    std::string name_;
    std::map<std::string, std::pair<std::string, int>>* entries_ = nullptr;
    std::set<std::string> used_;
};

void check_expression(SectionReader& sec, const std::string& key,
                      const std::string& text) {
    try {
        Expression::parse(text);
    } catch (const std::exception& e) {
        sec.fail(key, e.what());
    }
}

const char* kFieldKey[4] = {"T", "qv", "qc", "qr"};

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RawConfig raw = parse_raw(text, origin);
    RunConfig cfg;

    {
        SectionReader s(raw, "grid");
        s.integer("nx", cfg.nx);
        s.integer("ny", cfg.ny);
        s.integer("np", cfg.np);
        s.num("Lx", cfg.Lx);
        s.num("Ly", cfg.Ly);
        s.num("p1", cfg.p1);
        s.num("p0", cfg.p0);
        s.str("tbar", cfg.tbar);
        check_expression(s, "tbar", cfg.tbar);
        s.finish();
    }
    {
        SectionReader s(raw, "physics");
        PhysParams& p = cfg.physics;
        s.num("R_d", p.R_d);
        s.num("R_v", p.R_v);
        s.num("c_pd", p.c_pd);
        s.num("c_pv", p.c_pv);
        s.num("c_l", p.c_l);
        s.num("L0", p.L0);
        s.num("T0", p.T0);
        s.num("es0", p.es0);
        s.num("g", p.g);
        s.num("V", p.V);
        s.num("C_ev", p.C_ev);
        s.num("C_cd", p.C_cd);
        s.num("C_cn", p.C_cn);
        s.num("C_ac", p.C_ac);
        s.num("C_cr", p.C_cr);
        s.num("q_ac_star", p.q_ac_star);
        s.num("T_low", p.T_low);
        s.num("T_ramp", p.T_ramp);
        s.num("q_vs_max", p.q_vs_max);
        s.num("mu_T", p.mu_T);
        s.num("nu_T", p.nu_T);
        s.num("mu_qv", p.mu_qv);
        s.num("nu_qv", p.nu_qv);
        s.num("mu_qc", p.mu_qc);
        s.num("nu_qc", p.nu_qc);
        s.num("mu_qr", p.mu_qr);
        s.num("nu_qr", p.nu_qr);
        s.num("p0_ref", p.p0_ref);
        s.num("beta", cfg.beta);
        if (cfg.beta != 1.0)
            s.fail("beta", "only beta = 1 (linear evaporation in q_r) is "
                           "supported");
        try {
            p.validate();
        } catch (const std::exception& e) {
            raw.fail(std::string("[physics] ") + e.what());
        }
        s.finish();
    }
    {
        SectionReader s(raw, "velocity");
        std::string kind = "none";
        s.str("kind", kind);
        if (kind == "none")
            cfg.velocity.kind = VelocityKind::None;
        else if (kind == "analytic")
            cfg.velocity.kind = VelocityKind::Analytic;
        else if (kind == "file")
            cfg.velocity.kind = VelocityKind::File;
        else
            s.fail("kind", "expected none|analytic|file, got '" + kind + "'");
        s.num("amplitude", cfg.velocity.spec.amplitude);
        s.integer("mode_x", cfg.velocity.spec.mode_x);
        s.integer("mode_y", cfg.velocity.spec.mode_y);
        s.integer("mode_p", cfg.velocity.spec.mode_p);
        s.num("time_freq", cfg.velocity.spec.time_freq);
        s.str("path", cfg.velocity.path);
        s.num("div_tol", cfg.velocity.div_tol);
        s.num("flux_tol", cfg.velocity.flux_tol);
        if (cfg.velocity.kind == VelocityKind::File && cfg.velocity.path.empty())
            s.fail("path", "required when kind = file");
        s.finish();
    }
    {
        SectionReader s(raw, "initial");
        for (int f = 0; f < 4; ++f) {
            s.str(kFieldKey[f], cfg.initial.expr[f]);
            check_expression(s, kFieldKey[f], cfg.initial.expr[f]);
        }
        s.str("snapshot", cfg.initial.snapshot);
        s.finish();
    }
    {
        SectionReader s(raw, "boundary");
        for (int f = 0; f < 4; ++f) {
            const std::string base = kFieldKey[f];
            s.str(base + "_alpha0", cfg.boundary.alpha0[f]);
            s.str(base + "_b0", cfg.boundary.b0[f]);
            s.str(base + "_alphal", cfg.boundary.alphal[f]);
            s.str(base + "_bl", cfg.boundary.bl[f]);
            check_expression(s, base + "_alpha0", cfg.boundary.alpha0[f]);
            check_expression(s, base + "_b0", cfg.boundary.b0[f]);
            check_expression(s, base + "_alphal", cfg.boundary.alphal[f]);
            check_expression(s, base + "_bl", cfg.boundary.bl[f]);
        }
        s.finish();
    }
    {
        SectionReader s(raw, "stepping");
        std::string scheme = scheme_name(cfg.stepping.scheme);
        s.str("scheme", scheme);
        try {
            cfg.stepping.scheme = scheme_from_string(scheme);
        } catch (const std::exception& e) {
            s.fail("scheme", e.what());
        }
        s.num("cfl_adv", cfg.stepping.cfl_adv);
        s.num("cfl_diff", cfg.stepping.cfl_diff);
        s.num("cfl_sed", cfg.stepping.cfl_sed);
        s.num("dt_max", cfg.stepping.dt_max);
        s.num("dt_floor", cfg.stepping.dt_floor);
        s.num("t_end", cfg.stepping.t_end);
        s.boolean("clip_negative", cfg.stepping.clip_negative);
        try {
            cfg.stepping.validate();
        } catch (const std::exception& e) {
            raw.fail(std::string("[stepping] ") + e.what());
        }
        s.finish();
    }
    {
        SectionReader s(raw, "output");
        s.str("dir", cfg.output.dir);
        s.num("cadence", cfg.output.cadence);
        s.boolean("checkpoint", cfg.output.checkpoint);
        s.boolean("vtk", cfg.output.vtk);
        s.int_list("csv_levels", cfg.output.csv_levels);
        if (cfg.output.cadence < 0.0) s.fail("cadence", "must be >= 0");
        s.finish();
    }
    {
        SectionReader s(raw, "diagnostics");
        s.num("levelset_M", cfg.diagnostics.levelset_M);
        s.integer("levelset_kmax", cfg.diagnostics.levelset_kmax);
        s.num("tol_neg", cfg.diagnostics.tol_neg);
        s.num("tol_qv", cfg.diagnostics.tol_qv);
        if (cfg.diagnostics.levelset_kmax < 1)
            s.fail("levelset_kmax", "must be >= 1");
        s.finish();
    }
    {
        SectionReader s(raw, "mms");
        s.str("case", cfg.mms.mms_case);
        s.int_list("levels", cfg.mms.levels);
        if (cfg.mms.mms_case != "diffusion" && cfg.mms.mms_case != "advection")
            s.fail("case", "expected diffusion|advection");
        s.finish();
    }
    {
        SectionReader s(raw, "run");
        double seed = static_cast<double>(cfg.seed);
        s.num("seed", seed);
        cfg.seed = static_cast<unsigned long>(seed);
        s.finish();
    }

    static const std::set<std::string> known = {
        "grid",   "physics",  "velocity",    "initial", "boundary",
        "stepping", "output", "diagnostics", "mms",     "run"};
    for (const auto& [name, _] : raw.data)
        if (!known.count(name)) raw.fail("unknown section [" + name + "]");

    if (cfg.nx < 2 || cfg.ny < 2 || cfg.np < 2)
        raw.fail("[grid] nx, ny, np must all be >= 2");
    if (!(cfg.Lx > 0.0) || !(cfg.Ly > 0.0))
        raw.fail("[grid] Lx and Ly must be positive");
    if (!(cfg.p0 > cfg.p1) || !(cfg.p1 > 0.0))
        raw.fail("[grid] requires p0 > p1 > 0");

    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError(path + ": cannot open");
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str(), path);
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    os.precision(17);
    os << "[grid]\n"
       << "nx = " << nx << "\nny = " << ny << "\nnp = " << np << "\n"
       << "Lx = " << Lx << "\nLy = " << Ly << "\n"
       << "p1 = " << p1 << "\np0 = " << p0 << "\n"
       << "tbar = " << tbar << "\n\n";

    const PhysParams& p = physics;
    os << "[physics]\n"
       << "R_d = " << p.R_d << "\nR_v = " << p.R_v << "\n"
       << "c_pd = " << p.c_pd << "\nc_pv = " << p.c_pv << "\nc_l = " << p.c_l
       << "\n"
       << "L0 = " << p.L0 << "\nT0 = " << p.T0 << "\nes0 = " << p.es0 << "\n"
       << "g = " << p.g << "\nV = " << p.V << "\n"
       << "C_ev = " << p.C_ev << "\nC_cd = " << p.C_cd << "\nC_cn = " << p.C_cn
       << "\nC_ac = " << p.C_ac << "\nC_cr = " << p.C_cr << "\n"
       << "q_ac_star = " << p.q_ac_star << "\n"
       << "T_low = " << p.T_low << "\nT_ramp = " << p.T_ramp << "\n"
       << "q_vs_max = " << p.q_vs_max << "\n"
       << "mu_T = " << p.mu_T << "\nnu_T = " << p.nu_T << "\n"
       << "mu_qv = " << p.mu_qv << "\nnu_qv = " << p.nu_qv << "\n"
       << "mu_qc = " << p.mu_qc << "\nnu_qc = " << p.nu_qc << "\n"
       << "mu_qr = " << p.mu_qr << "\nnu_qr = " << p.nu_qr << "\n"
       << "p0_ref = " << p.p0_ref << "\n"
       << "beta = " << beta << "\n\n";

    os << "[velocity]\n"
       << "kind = "
       << (velocity.kind == VelocityKind::None
               ? "none"
               : velocity.kind == VelocityKind::Analytic ? "analytic" : "file")
       << "\n"
       << "amplitude = " << velocity.spec.amplitude << "\n"
       << "mode_x = " << velocity.spec.mode_x << "\n"
       << "mode_y = " << velocity.spec.mode_y << "\n"
       << "mode_p = " << velocity.spec.mode_p << "\n"
       << "time_freq = " << velocity.spec.time_freq << "\n";
    if (!velocity.path.empty()) os << "path = " << velocity.path << "\n";
    os << "div_tol = " << velocity.div_tol << "\n"
       << "flux_tol = " << velocity.flux_tol << "\n\n";

    os << "[initial]\n";
    for (int f = 0; f < 4; ++f)
        os << kFieldKey[f] << " = " << initial.expr[f] << "\n";
    if (!initial.snapshot.empty()) os << "snapshot = " << initial.snapshot << "\n";
    os << "\n[boundary]\n";
    for (int f = 0; f < 4; ++f) {
        const std::string base = kFieldKey[f];
        os << base << "_alpha0 = " << boundary.alpha0[f] << "\n"
           << base << "_b0 = " << boundary.b0[f] << "\n"
           << base << "_alphal = " << boundary.alphal[f] << "\n"
           << base << "_bl = " << boundary.bl[f] << "\n";
    }

    os << "\n[stepping]\n"
       << "scheme = " << scheme_name(stepping.scheme) << "\n"
       << "cfl_adv = " << stepping.cfl_adv << "\n"
       << "cfl_diff = " << stepping.cfl_diff << "\n"
       << "cfl_sed = " << stepping.cfl_sed << "\n"
       << "dt_max = " << stepping.dt_max << "\n"
       << "dt_floor = " << stepping.dt_floor << "\n"
       << "t_end = " << stepping.t_end << "\n"
       << "clip_negative = " << (stepping.clip_negative ? "true" : "false")
       << "\n\n";

    os << "[output]\n"
       << "dir = " << output.dir << "\n"
       << "cadence = " << output.cadence << "\n"
       << "checkpoint = " << (output.checkpoint ? "true" : "false") << "\n"
       << "vtk = " << (output.vtk ? "true" : "false") << "\n";
    if (!output.csv_levels.empty()) {
        os << "csv_levels = ";
        for (std::size_t i = 0; i < output.csv_levels.size(); ++i)
            os << (i ? "," : "") << output.csv_levels[i];
        os << "\n";
    }

    os << "\n[diagnostics]\n"
       << "levelset_M = " << diagnostics.levelset_M << "\n"
       << "levelset_kmax = " << diagnostics.levelset_kmax << "\n"
       << "tol_neg = " << diagnostics.tol_neg << "\n"
       << "tol_qv = " << diagnostics.tol_qv << "\n";

    os << "\n[mms]\n"
       << "case = " << mms.mms_case << "\n"
       << "levels = ";
    for (std::size_t i = 0; i < mms.levels.size(); ++i)
        os << (i ? "," : "") << mms.levels[i];
    os << "\n\n[run]\nseed = " << seed << "\n";
    return os.str();
}

Grid RunConfig::make_grid() const {
    GridConfig gc;
    gc.nx = nx;
    gc.ny = ny;
    gc.np = np;
    gc.Lx = Lx;
    gc.Ly = Ly;
    gc.p1 = p1;
    gc.p0 = p0;
    gc.g = physics.g;
    gc.R_d = physics.R_d;
    const Expression e = Expression::parse(tbar);
    gc.tbar = [e](double p) { return e.eval(0.0, 0.0, p, 0.0); };
    return build_grid(gc);
}

BoundarySpec RunConfig::make_boundary() const {
    BoundarySpec bc;
    for (int f = 0; f < 4; ++f) {
        const Expression a0 = Expression::parse(boundary.alpha0[f]);
        const Expression b0 = Expression::parse(boundary.b0[f]);
        const Expression al = Expression::parse(boundary.alphal[f]);
        const Expression bl = Expression::parse(boundary.bl[f]);
        FieldBC& fb = bc.field(f);
        fb.alpha0 = [a0](double x, double y, double t) {
            return a0.eval(x, y, 0.0, t);
        };
        fb.b0 = [b0](double x, double y, double t) {
            return b0.eval(x, y, 0.0, t);
        };
        fb.alphal = [al](double p, double t) {
            return al.eval(0.0, 0.0, p, t);
        };
        fb.bl = [bl](double p, double t) { return bl.eval(0.0, 0.0, p, t); };
    }
    return bc;
}

std::unique_ptr<VelocityProvider> RunConfig::make_velocity(
    const Grid& grid) const {
    switch (velocity.kind) {
        case VelocityKind::None: return std::make_unique<ZeroVelocity>();
        case VelocityKind::Analytic:
            return std::make_unique<AnalyticVelocity>(velocity.spec, grid);
        case VelocityKind::File:
            return load_velocity_series(velocity.path, grid, velocity.div_tol,
                                        velocity.flux_tol);
    }
    throw ConfigError("unreachable velocity kind");
}

MoistState RunConfig::make_initial_state(const Grid& grid) const {
    MoistState state;
    if (!initial.snapshot.empty()) {
        state = read_checkpoint(initial.snapshot, grid);
    } else {
        state = MoistState(grid);
        for (int f = 0; f < 4; ++f) {
            const Expression e = Expression::parse(initial.expr[f]);
            ScalarField& y = state.field(f);
            for (int k = 1; k <= grid.np; ++k)
                for (int j = 1; j <= grid.ny; ++j)
                    for (int i = 1; i <= grid.nx; ++i)
                        y(i, j, k) = e.eval(grid.x_center(i), grid.y_center(j),
                                            grid.p_center(k), 0.0);
        }
    }
    for (int f = 0; f < 4; ++f) {
        if (!field_interior_finite(state.field(f)))
            throw ConfigError(std::string("initial ") +
                              MoistState::field_name(f) + " has non-finite values");
        const auto [lo, hi] = field_minmax(state.field(f));
        if (lo < 0.0)
            throw ConfigError(std::string("initial ") +
                              MoistState::field_name(f) +
                              " is negative (min " + std::to_string(lo) + ")");
    }
    return state;
}

}  // namespace cloudsim
