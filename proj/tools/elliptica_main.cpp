// Command-line front end: decompose | verify | hilbert | slopes | theta | calibrate,
// with machine-readable JSON output and a config file for calibrated characteristics.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "elliptica/fractions.hpp"
#include "elliptica/hilbert.hpp"
#include "elliptica/relations.hpp"
#include "elliptica/serialize.hpp"
#include "elliptica/slopes.hpp"
#include "elliptica/theta.hpp"

using namespace elliptica;
using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

Complex parse_complex(const std::string& text) {
    // Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidParams("empty complex literal");
    if (s.back() == 'i' || s.back() == 'I' || s.back() == 'j') {
        s.pop_back();
        // Split off the imaginary coefficient: the last +/- not in an exponent.
        size_t split = std::string::npos;
        for (size_t p = s.size(); p-- > 1;) {
            if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
                split = p;
                break;
            }
        }
        std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
        std::string im_part = split == std::string::npos ? s : s.substr(split);
        if (im_part.empty() || im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        double re = re_part.empty() ? 0.0 : std::stod(re_part);
        return Complex(re, std::stod(im_part));
    }
    return Complex(std::stod(s), 0.0);
}

std::string fmt_complex(Complex z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

std::string fmt_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct RunConfig {
    Complex eta{0.0, 1.0};
    Complex tau{0.1234, 0.0567};
    Chars chars{0.5, 0.5};
    bool chars_from_cli_or_file = false;
    double trunc_tol = 1e-14;
    double denom_guard = 1e-10;
    double rank_rel_tol = 1e-8;
    std::uint64_t seed = 0;
    bool json = false;
    std::string config_path = "elliptica.cfg";

    TorusParams params() const { return TorusParams{eta, trunc_tol, denom_guard}; }
    ThetaBasis basis(int n) const { return ThetaBasis{n, chars, params()}; }
};

void load_config_file(RunConfig& cfg) {
    std::ifstream in(cfg.config_path);
    if (!in) return;
    std::string line;
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (kv.count("chars_a") && kv.count("chars_b")) {
        cfg.chars = Chars{std::stod(kv["chars_a"]), std::stod(kv["chars_b"])};
        cfg.chars_from_cli_or_file = true;
    }
    if (kv.count("eta")) cfg.eta = parse_complex(kv["eta"]);
    if (kv.count("tau")) cfg.tau = parse_complex(kv["tau"]);
}

void emit(const RunConfig& cfg, const Json& body, const std::string& human) {
    if (cfg.json) {
        Json out = body;
        out["schema"] = "elliptica/1";
        std::cout << out.dump() << "\n";
    } else {
        std::cout << human;
    }
}

int cmd_decompose(const RunConfig& cfg, long n, long k) {
    const auto fd = fraction_data(n, k);
    const auto kind = classify_variety(n, k);
    const auto gens = sigma_group_generators(n, k);
    const auto div = standard_divisor(n, k);

    Json body{{"command", "decompose"},
              {"n", n},
              {"k", k},
              {"cf", fd.cf},
              {"g", fd.g()},
              {"kseq", fd.kseq},
              {"lseq", fd.lseq},
              {"kprime", fd.kprime},
              {"sigma_coeffs", fd.sigma_coeffs},
              {"variety", kind.label()},
              {"sigma_generators", gens},
              {"divisor_degrees", div.point_degrees}};
    std::ostringstream os;
    os << "n/k = " << n << "/" << k << " = [";
    for (size_t i = 0; i < fd.cf.size(); ++i) os << (i ? "," : "") << fd.cf[i];
    os << "]  (g = " << fd.g() << ")\n";
    os << "k' = " << fd.kprime << ",  variety = " << kind.label() << "\n";
    os << "sigma coefficients:";
    for (long c : fd.sigma_coeffs) os << " " << c;
    os << "\ndivisor degrees:";
    for (long d : div.point_degrees) os << " " << d;
    os << "\nSigma generators:";
    for (long i : gens) os << " s_" << i;
    os << "\n";
    emit(cfg, body, os.str());
    return kExitOk;
}

Complex generic_tau(std::mt19937_64& rng, int n, Complex eta) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (;;) {
        double u = unif(rng), v = unif(rng);
        double d = 2.0;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                d = std::min(d, std::max(wrap_dist(u, double(i) / n), wrap_dist(v, double(j) / n)));
        if (d >= 0.01) return Complex(u, 0.0) + Complex(v, 0.0) * eta;
    }
}

int cmd_verify(const RunConfig& cfg, long n, long k, const std::string& which,
               const std::string& u_str, const std::string& v_str, int samples) {
    const auto basis = cfg.basis(static_cast<int>(n));
    Json body{{"command", "verify"}, {"n", n}, {"k", k}, {"which", which}};
    std::ostringstream os;
    bool pass = true;

    if (which == "relations") {
        const auto sys = build_relations(n, k, basis, cfg.tau);
        const auto rr = relation_rank(sys, cfg.rank_rel_tol);
        const long expect = n * (n - 1) / 2;
        pass = rr.rank == expect;
        body["rank"] = rr.rank;
        body["expected_rank"] = expect;
        body["gap"] = rr.gap;
        body["tolerance"] = cfg.rank_rel_tol;
        body["pass"] = pass;
        os << "relation rank " << rr.rank << " (expected " << expect << "), gap " << rr.gap
           << " -> " << (pass ? "pass" : "FAIL") << "\n";
    } else if (which == "ybe") {
        std::mt19937_64 rng(cfg.seed);
        const Complex u = u_str.empty() ? generic_tau(rng, n, cfg.eta) : parse_complex(u_str);
        const Complex v = v_str.empty() ? generic_tau(rng, n, cfg.eta) : parse_complex(v_str);
        const double resid = ybe_residual(n, k, basis, cfg.tau, u, v);
        body["residual"] = resid;
        body["u"] = fmt_complex(u);
        body["v"] = fmt_complex(v);
        if (k == 1) {
            pass = resid < 1e-9;
            body["tolerance"] = 1e-9;
            body["pass"] = pass;
            os << "QYBE residual " << resid << " -> " << (pass ? "pass" : "FAIL") << "\n";
        } else {
            body["assertion"] = "none (k >= 2)";
            body["pass"] = true;
            os << "QYBE residual " << resid << " (no assertion for k >= 2)\n";
        }
    } else if (which == "graph") {
        if (k != 1) throw NotApplicable("graph vanishing is checked for k = 1 only");
        const double resid =
            graph_vanishing_residual(n, basis, cfg.tau, samples, cfg.seed);
        pass = resid < 1e-8;
        body["residual"] = resid;
        body["samples"] = samples;
        body["tolerance"] = 1e-8;
        body["pass"] = pass;
        os << "graph-vanishing residual " << resid << " over " << samples << " samples -> "
           << (pass ? "pass" : "FAIL") << "\n";
    } else if (which == "orbit") {
        if (k != 1) throw NotApplicable("point-module orbits need k = 1");
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const TorusPoint p{unif(rng), unif(rng)};
        const int N = std::max(samples, 1);
        const auto orbit = point_module_orbit(n, basis, cfg.tau, p, N);
        double min_norm = std::numeric_limits<double>::infinity();
        for (const auto& e : orbit) min_norm = std::min(min_norm, e.eval.norm());
        pass = min_norm > 1e-8;
        body["orbit_length"] = orbit.size();
        body["min_eval_norm"] = min_norm;
        body["pass"] = pass;
        os << "orbit of length " << orbit.size() << ", min evaluation norm " << min_norm
           << " -> " << (pass ? "pass" : "FAIL") << "\n";
    } else {
        throw InvalidParams("unknown verification: " + which);
    }
    emit(cfg, body, os.str());
    return pass ? kExitOk : kExitFail;
}

int cmd_hilbert(const RunConfig& cfg, long n, long k, long maxdeg) {
    const auto kind = classify_variety(n, k);
    const bool poly = kind.tag == VarietyKind::Tag::ProjectiveSpace;
    std::vector<long long> q_row, b_row, ker_row;
    q_row.push_back(1);
    b_row.push_back(1);
    const auto ker = kernel_profile(n, k, maxdeg); // throws NotApplicable for general quotients
    for (long j = 1; j <= maxdeg; ++j) {
        q_row.push_back(hilbert_Q(n, j));
        b_row.push_back(poly ? hilbert_Q(n, j) : hilbert_B(n, k, j));
    }
    ker_row = ker;

    Json body{{"command", "hilbert"}, {"n", n},        {"k", k},
              {"maxdeg", maxdeg},     {"dim_Q", q_row}, {"dim_B", b_row},
              {"dim_ker", ker_row}};
    std::ostringstream os;
    os << "deg : dim Q, dim B, dim ker\n";
    os << "  0 : " << 1 << ", " << 1 << ", -\n";
    for (long j = 1; j <= maxdeg; ++j)
        os << "  " << j << " : " << q_row[j] << ", " << b_row[j] << ", " << ker_row[j - 1] << "\n";
    emit(cfg, body, os.str());
    return kExitOk;
}

int cmd_slopes(const RunConfig& cfg, long n, long k,
               const std::vector<std::pair<long long, long long>>& classes) {
    Json body{{"command", "slopes"}};
    std::ostringstream os;
    if (!classes.empty()) {
        if (classes.size() != 2)
            throw InvalidParams("criterion evaluation needs exactly two --class r d pairs");
        const SheafClass c1{classes[0].first, classes[0].second};
        const SheafClass c2{classes[1].first, classes[1].second};
        const bool crit = surjectivity_criterion(c1, c2);
        body["class1"] = {{"rank", c1.rank}, {"deg", c1.deg}, {"slope", fmt_rational(c1.slope())}};
        body["class2"] = {{"rank", c2.rank}, {"deg", c2.deg}, {"slope", fmt_rational(c2.slope())}};
        body["criterion"] = crit;
        os << "slopes " << fmt_rational(c1.slope()) << ", " << fmt_rational(c2.slope())
           << " -> surjectivity criterion " << (crit ? "true" : "false") << "\n";
    } else {
        const auto push = pushforward_class(n, k);
        const auto ker = evaluation_kernel_class(push);
        body["n"] = n;
        body["k"] = k;
        body["pushforward"] = {{"rank", push.rank},
                               {"deg", push.deg},
                               {"slope", fmt_rational(push.slope())}};
        body["kernel"] = {{"rank", ker.rank},
                          {"deg", ker.deg},
                          {"slope", fmt_rational(ker.slope())}};
        os << "pushforward class (rank " << push.rank << ", deg " << push.deg << "), slope "
           << fmt_rational(push.slope()) << "\n";
        os << "evaluation kernel class (rank " << ker.rank << ", deg " << ker.deg << "), slope "
           << fmt_rational(ker.slope()) << "\n";
    }
    emit(cfg, body, os.str());
    return kExitOk;
}

int cmd_theta(const RunConfig& cfg, long n, long alpha, const std::string& z_str) {
    const auto basis = cfg.basis(static_cast<int>(n));
    const Complex z = parse_complex(z_str);
    const Complex val = theta(basis, alpha, z);
    const auto [r1, r2] = quasiperiodicity_residuals(basis, alpha, z);
    const auto [h1, h2] = heisenberg_residuals(basis, alpha, z);
    Json body{{"command", "theta"},
              {"n", n},
              {"alpha", alpha},
              {"z", fmt_complex(z)},
              {"value", Json::array({val.real(), val.imag()})},
              {"quasiperiodicity_residuals", Json::array({r1, r2})},
              {"heisenberg_residuals", Json::array({h1, h2})}};
    std::ostringstream os;
    os << "theta_" << alpha << "(" << fmt_complex(z) << ") = " << fmt_complex(val) << "\n";
    os << "quasi-periodicity residuals: " << r1 << ", " << r2 << "\n";
    os << "Heisenberg residuals: " << h1 << ", " << h2 << "\n";
    emit(cfg, body, os.str());
    return kExitOk;
}

int cmd_calibrate(RunConfig& cfg, long n) {
    const auto chars = calibrate_characteristics(n, cfg.params(), cfg.tau, 20, cfg.seed);
    const auto basis = ThetaBasis{static_cast<int>(n), chars, cfg.params()};
    const double resid = graph_vanishing_residual(n, basis, cfg.tau, 20, cfg.seed);
    std::ofstream out(cfg.config_path);
    out << "chars_a=" << chars.a << "\n";
    out << "chars_b=" << chars.b << "\n";
    Json body{{"command", "calibrate"},
              {"n", n},
              {"chars", Json::array({chars.a, chars.b})},
              {"residual", resid},
              {"config", cfg.config_path}};
    std::ostringstream os;
    os << "calibrated chars (" << chars.a << ", " << chars.b << "), residual " << resid
       << ", written to " << cfg.config_path << "\n";
    emit(cfg, body, os.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feigin-Odesskii elliptic algebra toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string eta_str, tau_str;
    std::vector<double> chars_in;
    app.add_option("--eta", eta_str, "lattice parameter, e.g. 'i' or '0.1+1.2i'");
    app.add_option("--tau", tau_str, "translation parameter, e.g. '0.1234+0.0567i'");
    app.add_option("--chars", chars_in, "theta characteristics a b")->expected(2);
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.add_option("--tol-rank", cfg.rank_rel_tol, "relative SVD rank threshold");
    app.add_option("--tol-denom", cfg.denom_guard, "denominator guard");
    app.add_option("--config", cfg.config_path, "config file path");

    long n = 0, k = 0, maxdeg = 3, alpha = 0;
    std::string which, u_str, v_str, z_str = "0";
    int samples = 50;
    std::vector<long long> class_flat;

    auto* dec = app.add_subcommand("decompose", "continued-fraction data of n/k");
    dec->fallthrough();
    dec->add_option("n", n)->required();
    dec->add_option("k", k)->required();

    auto* ver = app.add_subcommand("verify", "numerical verification suites");
    ver->fallthrough();
    ver->add_option("n", n)->required();
    ver->add_option("k", k)->required();
    ver->add_option("which", which, "relations|ybe|graph|orbit")->required();
    ver->add_option("--u", u_str);
    ver->add_option("--v", v_str);
    ver->add_option("--samples", samples);

    auto* hil = app.add_subcommand("hilbert", "Hilbert function table");
    hil->fallthrough();
    hil->add_option("n", n)->required();
    hil->add_option("k", k)->required();
    hil->add_option("maxdeg", maxdeg)->required();

    auto* slo = app.add_subcommand("slopes", "slope calculus");
    slo->fallthrough();
    slo->add_option("n", n);
    slo->add_option("k", k);
    slo->add_option("--class", class_flat, "rank deg (give twice for the criterion)")
        ->type_size(2);

    auto* the = app.add_subcommand("theta", "evaluate a basis theta function");
    the->fallthrough();
    the->add_option("n", n)->required();
    the->add_option("alpha", alpha)->required();
    the->add_option("z", z_str)->required();

    auto* cal = app.add_subcommand("calibrate", "choose characteristics by graph vanishing");
    cal->fallthrough();
    cal->add_option("n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        load_config_file(cfg);
        if (!eta_str.empty()) cfg.eta = parse_complex(eta_str);
        if (!tau_str.empty()) cfg.tau = parse_complex(tau_str);
        if (chars_in.size() == 2) cfg.chars = Chars{chars_in[0], chars_in[1]};

        if (dec->parsed()) return cmd_decompose(cfg, n, k);
        if (ver->parsed()) return cmd_verify(cfg, n, k, which, u_str, v_str, samples);
        if (hil->parsed()) return cmd_hilbert(cfg, n, k, maxdeg);
        if (slo->parsed()) {
            std::vector<std::pair<long long, long long>> classes;
            for (size_t i = 0; i + 1 < class_flat.size(); i += 2)
                classes.emplace_back(class_flat[i], class_flat[i + 1]);
            return cmd_slopes(cfg, n, k, classes);
        }
        if (the->parsed()) return cmd_theta(cfg, n, alpha, z_str);
        if (cal->parsed()) return cmd_calibrate(cfg, n);
    } catch (const DenominatorNearZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const RankAmbiguous& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const CalibrationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const NotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
