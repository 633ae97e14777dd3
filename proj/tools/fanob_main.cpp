// fanob: exact-arithmetic toolkit for the slope invariants of rank-2
// bundles on Fano manifolds of Picard number one — splitting verdicts,
// the two-projective-bundle classification, Picard-lattice orbits and
// codimension-two complete-intersection criteria.

#include "fanob/json_io.hpp"
#include "fanob/slope.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fanob;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContradiction = 1;
constexpr int kExitSchema = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// A payload is either one JSON document, a JSON array, or JSON Lines.
std::vector<json> parse_payloads(const std::string& text) {
    std::vector<json> out;
    try {
        json whole = json::parse(text);
        if (whole.is_array())
            for (const auto& e : whole) out.push_back(e);
        else
            out.push_back(whole);
        return out;
    } catch (const json::parse_error&) {
        // fall through to line mode
    }
    std::istringstream ss(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (out.empty()) throw std::invalid_argument("empty input");
    return out;
}

json approx_block(const CriterionInput& in, const Rational& delta) {
    json a;
    a["delta"] = static_cast<double>(num(delta)) / static_cast<double>(den(delta));
    a["tau"] = quad_to_double(in.tau);
    if (in.rho) a["rho"] = quad_to_double(*in.rho);
    a["note"] = "decimal approximations; non-authoritative";
    return a;
}

json analyze_record(const json& payload, bool approx) {
    CriterionInput in = criterion_input_from_json(payload);
    Rational delta = discriminant(in.data);
    json rep;
    rep["input"] = bundle_to_json(in.data);
    rep["delta"] = rational_to_json(delta);
    rep["is_fano"] = is_fano(in.tau, in.data.i_x);
    json bounds;
    if (delta >= 0) {
        bounds["sqrt_delta"] = quad_to_json(QuadNumber::sqrt_of(delta));
        if (quad_plus_radical_sign(in.tau, Rational(-1), delta) >= 0) {
            auto [lo, hi] = rho_window(in.data, in.tau);
            bounds["epsilon"] = quad_to_json(window_epsilon(in.data, in.tau));
            bounds["rho_window"] = json::array({quad_to_json(lo), quad_to_json(hi)});
        }
        if (in.rho)
            bounds["window_bound_ok"] = check_relaxed_window_bound(in.data.n, in.tau, *in.rho, delta);
    } else {
        try {
            bounds["slope_gap_ok"] = check_slope_gap(in.data, in.tau);
        } catch (const UndecidableComparison& e) {
            bounds["slope_gap_ok"] = nullptr;
            bounds["slope_gap_note"] = e.what();
        }
        if (in.tau.is_rational()) {
            try {
                bounds["divisorial_rho"] =
                    quad_to_json(solve_divisorial_rho(in.data.n, in.tau.rational_value(), delta));
            } catch (const std::domain_error&) {
                // fiber-type degenerate; no divisorial rho to report
            }
        }
    }
    rep["bounds"] = bounds;
    rep["verdict"] = verdict_to_json(run_all(in));
    if (approx) rep["approx"] = approx_block(in, delta);
    return rep;
}

int run_analyze(const std::string& input, const std::string& format, bool approx) {
    std::vector<json> payloads = parse_payloads(read_all(input));
    bool contradiction = false;
    for (const auto& p : payloads) {
        json rep = analyze_record(p, approx);
        if (rep["verdict"]["outcome"] == "Contradiction") contradiction = true;
        if (format == "table") {
            std::string fired;
            for (const auto& f : rep["verdict"]["fired"]) {
                if (!fired.empty()) fired += ",";
                fired += f.get<std::string>();
            }
            std::cout << "outcome=" << rep["verdict"]["outcome"].get<std::string>()
                      << " delta=" << rep["delta"].get<std::string>()
                      << " fired=[" << fired << "]\n";
        } else {
            std::cout << rep.dump(2) << "\n";
        }
    }
    return contradiction ? kExitContradiction : kExitOk;
}

int run_classify(std::vector<unsigned> dims, long long d, const std::string& emit,
                 const EnumerationFilters& filters, bool solutions_only) {
    if (dims.empty()) dims = {2, 3, 5};
    if (solutions_only) {
        json out = json::array();
        for (unsigned n : dims)
            for (const auto& s : structure_equation_solutions(n, filters))
                out.push_back(json{{"n", n}, {"i_X", s.i_x}, {"i_Y", s.i_y}, {"mu", s.mu}});
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    // derive per solution; with relaxed filters some raw solutions have no
    // valid row, which is reported instead of aborting the listing
    std::vector<ClassificationRow> rows;
    json errors = json::array();
    for (unsigned n : dims)
        for (const auto& s : structure_equation_solutions(n, filters)) {
            try {
                rows.push_back(derive_row(n, s.i_x, s.i_y, s.mu, d));
            } catch (const std::domain_error& e) {
                errors.push_back(json{{"n", n},
                                      {"i_X", s.i_x},
                                      {"i_Y", s.i_y},
                                      {"mu", s.mu},
                                      {"error", e.what()}});
            }
        }
    if (emit == "table") {
        std::cout << "n  i_X  i_Y  d  mu  tau  Delta  c1  c2\n";
        for (const auto& r : rows)
            std::cout << r.n << "  " << r.i_x << "    " << r.i_y << "    " << r.d << "  " << r.mu
                      << "   " << to_string(r.tau) << "    " << to_string(r.delta) << "     "
                      << r.c1 << "  " << r.c2 << "\n";
        for (const auto& e : errors)
            std::cout << "# skipped (" << e["n"] << "," << e["i_X"] << "," << e["i_Y"] << ","
                      << e["mu"] << "): " << e["error"].get<std::string>() << "\n";
    } else {
        json out = json::array();
        for (const auto& r : rows) out.push_back(row_to_json(r));
        if (!errors.empty()) {
            json doc{{"rows", out}, {"skipped", errors}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << out.dump(2) << "\n";
        }
    }
    return kExitOk;
}

int run_cremona(long long k, unsigned steps, const std::string& emit) {
    if (k != 9)
        throw std::invalid_argument("the orbit is defined for k = 9 base points");
    auto seq = ell_sequence(steps);
    if (emit == "table") {
        std::cout << "n  class  tau\n";
        for (unsigned n = 0; n < seq.size(); ++n) {
            std::cout << n << "  (" << seq[n].deg.str() << ";";
            for (size_t i = 0; i < seq[n].mults.size(); ++i)
                std::cout << (i ? "," : " ") << seq[n].mults[i].str();
            std::cout << ")  " << to_string(tau_schwarzenberger(seq[n])) << "\n";
        }
    } else {
        json out = json::array();
        for (unsigned n = 0; n < seq.size(); ++n)
            out.push_back(json{{"n", n},
                               {"class", curve_to_json(seq[n])},
                               {"tau", rational_to_json(tau_schwarzenberger(seq[n]))}});
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

int run_hartshorne(unsigned n, std::optional<long long> a, std::optional<long long> b,
                   std::optional<long long> c1, std::optional<std::string> delta_s,
                   std::optional<long long> c2_twisted, std::optional<std::string> tau_y_s) {
    json rep;
    std::vector<std::string> assumptions;
    Verdict verdict;
    if (a && b) {
        rep["n"] = n;
        rep["a"] = *a;
        rep["b"] = *b;
        verdict = nci_verdict(n, *a, *b);
        rep["verdict"] = verdict_to_json(verdict);
        rep["c1"] = *a + *b;
        rep["delta"] = rational_to_json(Rational((*b - *a) * (*b - *a)));
        if (*a < *b) {
            Verdict p74 = c1_threshold_criterion(n, Rational((*b - *a) * (*b - *a)), *a + *b);
            rep["c1_threshold"] = verdict_to_json(p74);
        }
    } else if (c1 && delta_s) {
        Rational delta = parse_rational(*delta_s);
        rep["n"] = n;
        rep["c1"] = *c1;
        rep["delta"] = rational_to_json(delta);
        verdict = c1_threshold_criterion(n, delta, *c1);
        rep["verdict"] = verdict_to_json(verdict);
        rep["threshold"] = c1_split_threshold(n, delta).str();
        rep["rho_lower_bound"] = rational_to_json(rho_lower_bound(*c1));
        Rational tau_y;
        if (tau_y_s) {
            tau_y = parse_rational(*tau_y_s);
        } else {
            tau_y = Rational(*c1) - 2;
            assumptions.push_back("tau_Y defaulted to its universal bound c1 - 2");
        }
        long long c2t;
        if (c2_twisted) {
            c2t = *c2_twisted;
        } else {
            c2t = default_c2_twisted(n);
            assumptions.push_back(
                "c2 of the twisted normal bundle defaulted to the imported bound n + 2");
        }
        try {
            EpsilonBounds eb = epsilon_bounds(n, delta, tau_y, c2t);
            rep["epsilon_bounds"] = json{{"eps1", quad_to_json(eb.eps1)},
                                         {"eps2", quad_to_json(eb.eps2)},
                                         {"del1", quad_to_json(eb.del1)},
                                         {"del2", quad_to_json(eb.del2)},
                                         {"cond1", eb.cond1},
                                         {"cond2", eb.cond2}};
        } catch (const std::domain_error& e) {
            rep["epsilon_bounds"] = nullptr;
            rep["epsilon_bounds_note"] = e.what();
        }
    } else {
        throw std::invalid_argument("hartshorne needs either --a/--b or --c1/--delta");
    }
    if (!assumptions.empty()) rep["assumptions"] = assumptions;
    std::cout << rep.dump(2) << "\n";
    return verdict.outcome == Outcome::Contradiction ? kExitContradiction : kExitOk;
}

int run_ring_eval(unsigned n, const std::string& delta_s, long long dx,
                  const std::vector<std::string>& taus, const std::vector<std::string>& rhos,
                  const std::string& emit) {
    Rational delta = parse_rational(delta_s);
    if (dx < 1) throw std::invalid_argument("--dx must be positive");
    json out = json::array();
    for (const auto& ts : taus)
        for (const auto& rs : rhos) {
            Rational tau = parse_rational(ts), rho = parse_rational(rs);
            for (unsigned j = 0; j <= n; ++j) {
                Rational ring = positivity_form_ring(j, rho, tau, n, delta, Int(dx));
                Rational closed = positivity_form_closed(j, rho, tau, delta, Int(dx));
                out.push_back(json{{"j", j},
                                   {"tau", rational_to_json(tau)},
                                   {"rho_prime", rational_to_json(rho)},
                                   {"ring_value", rational_to_json(ring)},
                                   {"closed_form", rational_to_json(closed)}});
            }
        }
    if (emit == "table") {
        std::cout << "j  tau  rho'  value(ring)  value(closed)\n";
        for (const auto& e : out)
            std::cout << e["j"].get<unsigned>() << "  " << e["tau"].get<std::string>() << "  "
                      << e["rho_prime"].get<std::string>() << "  "
                      << e["ring_value"].get<std::string>() << "  "
                      << e["closed_form"].get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for nef/pseudoeffective slopes of rank-2 bundles on Fano "
                 "manifolds: splitting verdicts, classification, Picard-lattice orbits."};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Slope bounds and splitting verdicts for "
                                                  "bundle records (JSON or JSON Lines)");
    std::string input = "-";
    std::string an_format = "json";
    bool approx = false;
    analyze->add_option("--input,-i", input, "Input path or - for stdin");
    analyze->add_option("--format", an_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    analyze->add_flag("--approx", approx, "Add non-authoritative decimal approximations");

    // classify
    auto* classify = app.add_subcommand("classify", "Enumerate the two-bundle-structure rows");
    std::vector<unsigned> dims;
    long long cl_d = 1;
    std::string cl_emit = "json";
    bool raw = false, no_plane = false, no_canonical = false, no_ko = false,
         solutions_only = false;
    classify->add_option("--n", dims, "Dimension (2, 3 or 5); repeatable; default all");
    classify->add_option("--d", cl_d, "H_X^2 in Sigma-units (default 1)");
    classify->add_option("--emit", cl_emit, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    classify->add_flag("--raw", raw, "Drop every named filter (raw Diophantine solutions)");
    classify->add_flag("--no-plane-filter", no_plane, "Keep non-plane candidates in dim 2");
    classify->add_flag("--no-canonical", no_canonical, "Keep both orientations i_X < i_Y");
    classify->add_flag("--no-ko-bound", no_ko, "Drop the index bound i <= n+1");
    classify->add_flag("--solutions-only", solutions_only,
                       "Emit the integer solutions instead of derived rows");

    // cremona
    auto* cremona_cmd = app.add_subcommand("cremona", "Orbit of the last-two-points line under "
                                                      "the composite quadratic transformation");
    long long k = 9;
    unsigned steps = 10;
    std::string cr_emit = "table";
    cremona_cmd->add_option("--k", k, "Number of base points (the orbit needs 9)");
    cremona_cmd->add_option("--steps", steps, "Number of orbit steps");
    cremona_cmd->add_option("--emit", cr_emit, "table or json")
        ->check(CLI::IsMember({"json", "table"}));

    // hartshorne
    auto* hart = app.add_subcommand("hartshorne", "Codimension-two complete-intersection and "
                                                  "decomposability criteria");
    unsigned h_n = 8;
    std::optional<long long> h_a, h_b, h_c1, h_c2t;
    std::optional<std::string> h_delta, h_tau_y;
    hart->add_option("--n", h_n, "Ambient dimension (>= 8)")->required();
    hart->add_option("--a", h_a, "Type component a (1 <= a <= b)");
    hart->add_option("--b", h_b, "Type component b");
    hart->add_option("--c1", h_c1, "Raw first Chern class (>= 2)");
    hart->add_option("--delta", h_delta, "Discriminant as p/q");
    hart->add_option("--c2-twisted", h_c2t, "c2 of the twisted normal bundle");
    hart->add_option("--tau-y", h_tau_y, "Nef slope of the normal bundle as p/q");

    // ring-eval
    auto* ring = app.add_subcommand("ring-eval", "Positivity values over a (j, rho', tau) grid");
    unsigned r_n = 3;
    std::string r_delta = "0";
    long long r_dx = 1;
    std::vector<std::string> r_taus, r_rhos;
    std::string r_emit = "json";
    ring->add_option("--n", r_n, "Base dimension")->required();
    ring->add_option("--delta", r_delta, "Discriminant as p/q")->required();
    ring->add_option("--dx", r_dx, "Base degree d_X (default 1)");
    ring->add_option("--tau", r_taus, "Nef slope values (repeatable)")->required();
    ring->add_option("--rho-prime", r_rhos, "Pseudoeffective test values (repeatable)")
        ->required();
    ring->add_option("--emit", r_emit, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitSchema;
    }

    try {
        if (*analyze) return run_analyze(input, an_format, approx);
        if (*classify) {
            EnumerationFilters filters;
            if (raw) filters = {false, false, false, false};
            if (no_plane) filters.plane_only_in_dim2 = false;
            if (no_canonical) filters.canonical_orientation = false;
            if (no_ko) filters.ko_bound = false;
            return run_classify(dims, cl_d, cl_emit, filters, solutions_only);
        }
        if (*cremona_cmd) return run_cremona(k, steps, cr_emit);
        if (*hart) return run_hartshorne(h_n, h_a, h_b, h_c1, h_delta, h_c2t, h_tau_y);
        if (*ring) return run_ring_eval(r_n, r_delta, r_dx, r_taus, r_rhos, r_emit);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitContradiction;
    }
    return kExitOk;
}
