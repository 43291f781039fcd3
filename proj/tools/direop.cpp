// direop: evaluate Dirac scalar potentials, their closed-form spectra and
// spinor eigenfunctions, and verify every analytic claim against the
// finite-difference eigensolver. Emits diff-able CSV/JSON datasets.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "direop/figures.hpp"
#include "direop/numerics.hpp"
#include "direop/potentials.hpp"
#include "direop/report_json.hpp"
#include "direop/spectra.hpp"
#include "direop/verify.hpp"

namespace {

using namespace direop;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RunConfig {
    std::string family = "oscillator";
    double omega = 2.0;
    double ell = 1.0;
    double A = 0.0;
    double B = 0.0;
    std::string m_list = "0";
    bool parametric = false;
    int n = 0;
    int levels = 4;
    int grid_count = 4000;
    double tail_tol = 1e-12;
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string output;

    std::vector<int> parse_m() const {
        std::vector<int> ms;
        std::stringstream ss(m_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            ms.push_back(std::stoi(tok));
        }
        if (ms.empty()) throw std::invalid_argument("--m needs at least one value");
        return ms;
    }

    PotentialSpec spec(int m) const {
        const Family fam = family_from_name(family);
        switch (fam) {
            case Family::radial_oscillator: {
                PotentialSpec s = PotentialSpec::radial_oscillator(omega, ell, m);
                s.parametric = parametric;  // validate() rejects it for this family
                return s;
            }
            case Family::trig_scarf:
                return PotentialSpec::trig_scarf(A, B, m, parametric);
            case Family::hyp_poschl_teller:
                return PotentialSpec::hyp_poschl_teller(A, B, m, parametric);
        }
        throw std::logic_error("unreachable family");
    }

    /// Canonical flag string: rerunning `direop <this>` reproduces the output
    /// byte for byte.
    std::string canonical(const std::string& command, bool with_n, bool with_levels) const {
        std::string s = command + " --family " + family_name(family_from_name(family));
        if (family_from_name(family) == Family::radial_oscillator)
            s += " --omega " + fmt(omega) + " --ell " + fmt(ell);
        else
            s += " --A " + fmt(A) + " --B " + fmt(B);
        if (parametric) s += " --parametric";
        s += " --m " + m_list;
        if (with_n) s += " --n " + std::to_string(n);
        if (with_levels) s += " --levels " + std::to_string(levels);
        s += " --grid-count " + std::to_string(grid_count);
        s += " --tail-tol " + fmt(tail_tol);
        s += " --seed " + std::to_string(seed);
        s += " --format " + format;
        return s;
    }
};

void apply_env_seed(RunConfig& cfg) {
    if (const char* env = std::getenv("DIREOP_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("DIREOP_SEED is not an unsigned integer: " +
                                        std::string(env));
        }
    }
}

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.output.empty()) return std::cout;
    file.open(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + cfg.output);
    return file;
}

ordered_json config_json(const RunConfig& cfg, const std::string& rerun) {
    ordered_json j;
    j["rerun"] = rerun;
    j["grid_count"] = cfg.grid_count;
    j["tail_tol"] = cfg.tail_tol;
    j["seed"] = cfg.seed;
    return j;
}

// ---- potential / wavefunction datasets ----

struct SeriesRow {
    double x;
    std::vector<double> cols;
};

struct Series {
    int m;
    std::vector<SeriesRow> rows;
};

void emit_table(std::ostream& os, const RunConfig& cfg, const std::string& command,
                const std::string& rerun, const std::vector<std::string>& columns,
                const std::vector<Series>& series) {
    if (cfg.format == "csv") {
        os << "# direop " << command << "\n";
        os << "# config: " << rerun << "\n";
        os << "m,x";
        for (const std::string& c : columns) os << "," << c;
        os << "\n";
        for (const Series& s : series)
            for (const SeriesRow& r : s.rows) {
                os << s.m << "," << fmt(r.x);
                for (double v : r.cols) os << "," << fmt(v);
                os << "\n";
            }
    } else {
        ordered_json j;
        j["command"] = command;
        j["config"] = config_json(cfg, rerun);
        ordered_json cols = ordered_json::array();
        cols.push_back("x");
        for (const std::string& c : columns) cols.push_back(c);
        j["columns"] = std::move(cols);
        ordered_json arr = ordered_json::array();
        for (const Series& s : series) {
            ordered_json js;
            js["m"] = s.m;
            ordered_json rows = ordered_json::array();
            for (const SeriesRow& r : s.rows) {
                ordered_json row = ordered_json::array();
                row.push_back(r.x);
                for (double v : r.cols) row.push_back(v);
                rows.push_back(std::move(row));
            }
            js["rows"] = std::move(rows);
            arr.push_back(std::move(js));
        }
        j["series"] = std::move(arr);
        os << j.dump(2) << "\n";
    }
}

int run_potential(const RunConfig& cfg) {
    std::vector<Series> series;
    for (int m : cfg.parse_m()) {
        const PotentialSpec spec = cfg.spec(m);
        validate(spec);
        const DomainInfo dom = truncate_domain(spec, cfg.tail_tol);
        const Grid grid = make_grid(dom.x_min, dom.x_max, cfg.grid_count);
        Series s{m, {}};
        s.rows.reserve(grid.count);
        for (int i = 0; i < grid.count; ++i) {
            const double x = grid.node(i);
            const PhiValue pv = phi_eval(spec, x);
            s.rows.push_back({x, {pv.phi, pv.phi * pv.phi - pv.dphi, pv.phi * pv.phi + pv.dphi}});
        }
        series.push_back(std::move(s));
    }
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    emit_table(os, cfg, "potential", cfg.canonical("potential", false, false),
               {"phi", "v1", "v2"}, series);
    return 0;
}

int run_wavefunction(const RunConfig& cfg) {
    std::vector<Series> series;
    for (int m : cfg.parse_m()) {
        const PotentialSpec spec = cfg.spec(m);
        validate(spec);
        const DomainInfo dom = truncate_domain(spec, cfg.tail_tol);
        const Grid grid = make_grid(dom.x_min, dom.x_max, cfg.grid_count);
        Series s{m, {}};
        s.rows.reserve(grid.count);
        for (const SpinorSample& sam : dirac_samples(spec, cfg.n, grid))
            s.rows.push_back({sam.x, {sam.psi1, sam.psi2}});
        series.push_back(std::move(s));
    }
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    emit_table(os, cfg, "wavefunction", cfg.canonical("wavefunction", true, false),
               {"psi1", "psi2"}, series);
    return 0;
}

int run_spectrum(const RunConfig& cfg, bool check, double tol) {
    const std::vector<int> ms = cfg.parse_m();
    if (ms.size() != 1)
        throw std::invalid_argument("spectrum takes a single --m value");
    const PotentialSpec spec = cfg.spec(ms[0]);
    validate(spec);
    const DomainInfo dom = truncate_domain(spec, cfg.tail_tol);
    const GridPair pair = make_grid_pair(dom, cfg.grid_count);
    int levels = cfg.levels;
    if (const auto nm = max_level(spec)) levels = std::min(levels, *nm + 1);
    const SpectrumComparison cmp = compare_spectrum(spec, levels, pair);

    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    const std::string rerun = cfg.canonical("spectrum", false, true);
    if (cfg.format == "csv") {
        os << "# direop spectrum\n# config: " << rerun << "\n";
        os << "n,energy_analytic,energy_conventional,numeric,abs_err\n";
        for (int n = 0; n < levels; ++n)
            os << n << "," << fmt(energy(spec, n)) << "," << fmt(energy_conventional(spec, n))
               << "," << fmt(cmp.numeric[n]) << "," << fmt(cmp.level_abs_err[n]) << "\n";
    } else {
        ordered_json j;
        j["command"] = "spectrum";
        j["config"] = config_json(cfg, rerun);
        j["offset_c"] = cmp.offset_c;
        j["spacing_max_dev"] = cmp.spacing_max_dev;
        ordered_json rows = ordered_json::array();
        for (int n = 0; n < levels; ++n) {
            ordered_json r;
            r["n"] = n;
            r["energy_analytic"] = energy(spec, n);
            r["energy_conventional"] = energy_conventional(spec, n);
            r["numeric"] = cmp.numeric[n];
            r["abs_err"] = cmp.level_abs_err[n];
            rows.push_back(std::move(r));
        }
        j["levels"] = std::move(rows);
        os << j.dump(2) << "\n";
    }
    if (check)
        for (double e : cmp.level_abs_err)
            if (e > tol) return 1;
    return 0;
}

int run_verify(const RunConfig& cfg, const std::string& suite, const Thresholds& thresholds,
               double perturb) {
    VerifySettings settings;
    settings.grid_count = cfg.grid_count;
    settings.tail_tol = cfg.tail_tol;
    settings.seed = cfg.seed;
    settings.energy_perturbation = perturb;
    int n_levels = 4;
    if (suite == "quick") {
        settings.use_richardson = false;
        n_levels = 3;
    } else if (suite != "full") {
        throw std::invalid_argument("--suite must be quick or full");
    }

    std::vector<PotentialSpec> matrix;
    for (const FigurePreset& p : figure_presets()) {
        if (p.wavefunction) continue;  // one entry per parameter set
        for (int m = 0; m <= 2; ++m) {
            PotentialSpec s = p.base;
            s.m = m;
            matrix.push_back(s);
        }
    }

    std::vector<std::future<VerificationReport>> jobs;
    jobs.reserve(matrix.size());
    for (const PotentialSpec& spec : matrix)
        jobs.push_back(std::async(std::launch::async, [spec, n_levels, settings] {
            return full_report(spec, n_levels, settings);
        }));

    bool all_pass = true;
    ordered_json reports = ordered_json::array();
    for (auto& job : jobs) {
        const VerificationReport rep = job.get();
        all_pass = all_pass && rep.passes(thresholds);
        reports.push_back(report_to_json(rep));
    }

    ordered_json j;
    j["suite"] = suite;
    ordered_json th;
    th["spacing"] = thresholds.spacing;
    th["level_abs"] = thresholds.level_abs;
    th["gram"] = thresholds.gram;
    th["intertwine"] = thresholds.intertwine;
    th["dirac"] = thresholds.dirac;
    th["zero_mode"] = thresholds.zero_mode;
    j["thresholds"] = std::move(th);
    j["reports"] = std::move(reports);
    j["pass"] = all_pass;

    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    os << j.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int run_figure(const RunConfig& cfg_in, const std::string& id) {
    const FigurePreset* preset = find_figure(id);
    if (!preset) throw std::invalid_argument("unknown figure id '" + id + "' (1a..5b)");
    RunConfig cfg = cfg_in;
    cfg.family = family_name(preset->base.family);
    cfg.parametric = preset->base.parametric;
    if (preset->base.family == Family::radial_oscillator) {
        cfg.omega = preset->base.osc.omega;
        cfg.ell = preset->base.osc.ell;
    } else {
        cfg.A = preset->base.shape.A;
        cfg.B = preset->base.shape.B;
    }
    cfg.m_list = "0,1,2";
    cfg.n = 0;
    return preset->wavefunction ? run_wavefunction(cfg) : run_potential(cfg);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    bool check = false;
    double tol = 1e-4;
    std::string suite = "full";
    std::string figure_id;
    Thresholds thresholds;
    double perturb = 0.0;

    CLI::App app{"Dirac scalar potentials with exceptional-orthogonal-polynomial solutions"};
    app.require_subcommand(1);

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--family", cfg.family, "oscillator | scarf | pt");
        cmd->add_option("--omega", cfg.omega, "oscillator frequency (> 0)");
        cmd->add_option("--ell", cfg.ell, "oscillator angular parameter (> 0)");
        cmd->add_option("--A", cfg.A, "shape parameter A");
        cmd->add_option("--B", cfg.B, "shape parameter B");
        cmd->add_flag("--parametric", cfg.parametric, "apply the parametric transformation");
    };
    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--grid-count", cfg.grid_count, "interior grid nodes")
            ->check(CLI::Range(16, 2000000));
        cmd->add_option("--tail-tol", cfg.tail_tol, "domain truncation tail tolerance");
        cmd->add_option("--seed", cfg.seed, "seed for randomized starts");
        cmd->add_option("--format", cfg.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", cfg.output, "output path (default: stdout)");
    };

    CLI::App* c_pot = app.add_subcommand("potential", "emit x, phi, V1, V2 samples");
    add_spec_flags(c_pot);
    c_pot->add_option("--m", cfg.m_list, "comma-separated extension degrees");
    add_run_flags(c_pot);

    CLI::App* c_wav = app.add_subcommand("wavefunction", "emit normalized spinor samples");
    add_spec_flags(c_wav);
    c_wav->add_option("--m", cfg.m_list, "comma-separated extension degrees");
    c_wav->add_option("--n", cfg.n, "level index (default 0)");
    add_run_flags(c_wav);

    CLI::App* c_spe = app.add_subcommand("spectrum", "closed-form vs numeric levels");
    add_spec_flags(c_spe);
    c_spe->add_option("--m", cfg.m_list, "extension degree");
    c_spe->add_option("--levels", cfg.levels, "number of levels");
    c_spe->add_flag("--check", check, "exit 1 if any |numeric - analytic| exceeds --tol");
    c_spe->add_option("--tol", tol, "tolerance for --check");
    add_run_flags(c_spe);

    CLI::App* c_ver = app.add_subcommand("verify", "run the verification suite");
    c_ver->add_option("--suite", suite, "quick | full");
    c_ver->add_option("--spacing-tol", thresholds.spacing, "spacing deviation threshold");
    c_ver->add_option("--level-tol", thresholds.level_abs, "per-level error threshold");
    c_ver->add_option("--gram-tol", thresholds.gram, "Gram deviation threshold");
    c_ver->add_option("--intertwine-tol", thresholds.intertwine, "ladder residual threshold");
    c_ver->add_option("--dirac-tol", thresholds.dirac, "coupled-equation residual threshold");
    c_ver->add_option("--zero-mode-tol", thresholds.zero_mode, "annihilation threshold");
    c_ver->add_option("--perturb-energy", perturb,
                      "shift every analytic energy (falsifiability hook)");
    add_run_flags(c_ver);

    CLI::App* c_fig = app.add_subcommand("figure", "emit a published dataset by id");
    c_fig->add_option("id", figure_id, "1a 1b 2a 2b 3a 3b 4a 4b 5a 5b")->required();
    add_run_flags(c_fig);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        apply_env_seed(cfg);
        if (c_pot->parsed()) return run_potential(cfg);
        if (c_wav->parsed()) return run_wavefunction(cfg);
        if (c_spe->parsed()) return run_spectrum(cfg, check, tol);
        if (c_ver->parsed()) return run_verify(cfg, suite, thresholds, perturb);
        if (c_fig->parsed()) return run_figure(cfg, figure_id);
        return 2;
    } catch (const invalid_spec_error& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const singular_extension_error& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return 2;
    } catch (const level_range_error& e) {
        std::cerr << "invalid level: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
