#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modray/experiments.hpp"
#include "modray/parse.hpp"

namespace {

using namespace modray;

constexpr int kExitPass = 0;
constexpr int kExitStatFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitPrecision = 4;

struct GlobalOpts {
    uint32_t p = 2;
    uint32_t n = 1;
    std::string modulus;
    int prec = 256;
    uint64_t seed = 0;
    uint64_t samples = 100000;
    std::string output;
    std::string format = "json";
};

Field make_field(const GlobalOpts& g) {
    if (g.n == 1) {
        if (!g.modulus.empty()) throw DomainError("--modulus is only valid with --n > 1");
        return Field::prime(g.p);
    }
    if (g.modulus.empty()) throw DomainError("--modulus is required when --n > 1");
    return Field::extension(g.p, g.n, parse_modulus(g.p, g.n, g.modulus));
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + g.output);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

void print_caret(const ParseError& e) {
    std::cerr << "parse error: " << e.what() << " at position " << e.position << "\n";
    if (!e.input.empty()) {
        std::cerr << "  " << e.input << "\n  ";
        for (std::size_t i = 0; i < e.position && i < e.input.size(); ++i) std::cerr << ' ';
        std::cerr << "^\n";
    }
}

nlohmann::ordered_json cf_json(const Poly& integer_part, const CfExpansion& cf) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : cf.terms) j["terms"].push_back(poly_to_string(t.poly()));
    j["terminated"] = to_string(cf.terminated);
    j["budget_spent"] = cf.budget_spent;
    j["integer_part"] = poly_to_string(integer_part);
    return j;
}

int cmd_cf(const GlobalOpts& g, const std::string& num, const std::string& den,
           const std::string& coeffs, int max_terms) {
    Field f = make_field(g);
    if (!coeffs.empty()) {
        std::vector<uint32_t> c;
        std::stringstream ss(coeffs);
        std::string item;
        while (std::getline(ss, item, ','))
            c.push_back(parse_element(f, item).code());
        if (c.empty()) throw ParseError("empty coefficient list", 0);
        LaurentSeries s =
            LaurentSeries::from_coeffs(f, 1, c, static_cast<int>(c.size()), false);
        CfExpansion cf = cf_expand(s, max_terms);
        nlohmann::ordered_json j = cf_json(Poly::zero(f), cf);
        j["input"] = series_to_string(s);
        nlohmann::ordered_json sj;
        sj["val"] = s.is_normal() ? s.val() : s.prec() + 1;
        sj["prec"] = s.prec();
        sj["coeffs"] = nlohmann::ordered_json::array();
        if (s.is_normal())
            for (int i = s.val(); i <= s.prec(); ++i)
                sj["coeffs"].push_back(element_to_string(f, s.coeff(i)));
        j["input_series"] = sj;
        emit(g, j.dump(2));
        return kExitPass;
    }
    Poly pn = parse_poly(f, num);
    Poly pd = parse_poly(f, den.empty() ? "1" : den);
    RationalFunction x(pn, pd);
    // Exact path: split off the integer part and expand the remainder by
    // iterated Euclidean division.
    std::vector<Poly> terms = euclid_cf(x);
    CfExpansion cf;
    cf.terminated = CfTermination::ExactRational;
    Poly a0 = terms.empty() ? Poly::zero(f) : terms.front();
    for (size_t i = 1; i < terms.size(); ++i) {
        if (static_cast<int>(cf.terms.size()) >= max_terms) {
            cf.terminated = CfTermination::LengthReached;
            break;
        }
        cf.budget_spent += 2 * terms[i].degree();
        cf.terms.emplace_back(terms[i]);
    }
    emit(g, cf_json(a0, cf).dump(2));
    return kExitPass;
}

int cmd_orbit(const GlobalOpts& g, int steps, const std::string& num, const std::string& den) {
    Field f = make_field(g);
    LaurentSeries cur = LaurentSeries::exact_zero(f);
    if (!num.empty()) {
        RationalFunction x(parse_poly(f, num), parse_poly(f, den.empty() ? "1" : den));
        cur = LaurentSeries::from_rational(x, g.prec).fractional_part();
    } else {
        RngStream rng(g.seed, 0);
        cur = sample_haar_unit_ball(f, rng, g.prec);
    }
    std::ostringstream csv;
    csv << "step,quotient,degree,prec_remaining\n";
    for (int k = 1; k <= steps; ++k) {
        if (cur.is_exact_zero()) {
            csv << k << ",exact-rational,,\n";
            break;
        }
        if (cur.is_zero_to_prec() || (!cur.exact() && cur.prec() - 2 * cur.val() < 1)) {
            csv << k << ",precision-exhausted,,\n";
            break;
        }
        ArtinStep step = artin_step(cur);
        cur = step.next;
        int remaining = cur.is_exact_zero() ? g.prec : cur.prec();
        csv << k << "," << poly_to_string(step.quotient.poly()) << ","
            << step.quotient.degree() << "," << remaining << "\n";
    }
    emit(g, csv.str());
    return kExitPass;
}

int cmd_code(const GlobalOpts& g, int n_back, int n_fwd) {
    Field f = make_field(g);
    RngStream rng(g.seed, 0);
    GeodesicSection sec = sample_section(f, rng, g.prec);
    DecoratedCoding dc = code_decorated(sec, n_back, n_fwd);
    if (g.format == "csv") {
        std::ostringstream csv;
        csv << "n,quotient,degree,sojourn\n";
        std::vector<int> lengths = sojourn_lengths(dc.frames);
        for (int n = dc.letters.lo(); n <= dc.letters.hi(); ++n)
            csv << n << "," << poly_to_string(dc.quotients.at(n).poly()) << ","
                << dc.quotients.at(n).degree() << ","
                << lengths[static_cast<size_t>(n - dc.letters.lo())] << "\n";
        emit(g, csv.str());
        return kExitPass;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int n = dc.letters.lo(); n <= dc.letters.hi(); ++n) {
        const AffineMap& b = dc.letters.at(n);
        j.push_back({{"n", n},
                     {"u", element_to_string(b.multiplier())},
                     {"a", poly_to_string(b.translation())}});
    }
    emit(g, j.dump(2));
    return kExitPass;
}

int cmd_verify(const GlobalOpts& g, const std::string& name, const ExperimentConfig& cfg) {
    Field f = make_field(g);
    Report rep = run_experiment(name, f, cfg);
    emit(g, rep.to_json().dump(2));
    return rep.pass ? kExitPass : kExitStatFail;
}

std::array<Poly, 4> parse_matrix(const Field& f, const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() != 4)
        throw ParseError("matrix needs four ';'-separated polynomial entries", 0);
    return {parse_poly(f, parts[0]), parse_poly(f, parts[1]), parse_poly(f, parts[2]),
            parse_poly(f, parts[3])};
}

int cmd_distance(const GlobalOpts& g, const std::string& m1, const std::string& m2) {
    Field f = make_field(g);
    auto a = parse_matrix(f, m1);
    auto b = parse_matrix(f, m2);
    TreeVertex v(Homography(a[0], a[1], a[2], a[3]));
    TreeVertex w(Homography(b[0], b[1], b[2], b[3]));
    nlohmann::ordered_json j;
    j["distance"] = vertex_distance(v, w);
    emit(g, j.dump(2));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Artin continued-fraction dynamics over F_q((1/X)) and the "
                 "geodesic coding on the Bruhat-Tits tree"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--p", g.p, "field characteristic (prime)")->required();
    app.add_option("--n", g.n, "extension degree");
    app.add_option("--modulus", g.modulus, "irreducible modulus in t (required iff n > 1)");
    app.add_option("--prec", g.prec, "working precision")->check(CLI::Range(8, 1 << 20));
    app.add_option("--seed", g.seed, "rng seed");
    app.add_option("--samples", g.samples, "sample count")->check(CLI::Range(1ull, 1ull << 40));
    app.add_option("--output", g.output, "output path (default stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* cf = app.add_subcommand("cf", "continued fraction expansion");
    std::string num, den, coeffs;
    int max_terms = 64;
    cf->add_option("--num", num, "numerator polynomial");
    cf->add_option("--den", den, "denominator polynomial");
    cf->add_option("--coeffs", coeffs, "series coefficients at X^-1, X^-2, ...");
    cf->add_option("--max-terms", max_terms, "maximum quotients");

    auto* orbit = app.add_subcommand("orbit", "iterate the Artin map");
    int steps = 32;
    std::string onum, oden;
    orbit->add_option("--steps", steps, "iteration count");
    orbit->add_option("--num", onum, "numerator of a rational start");
    orbit->add_option("--den", oden, "denominator of a rational start");

    auto* code = app.add_subcommand("code", "decorated coding of a sampled section");
    int n_back = 4, n_fwd = 4;
    code->add_option("--back", n_back, "backward window");
    code->add_option("--fwd", n_fwd, "forward window");

    auto* verify = app.add_subcommand("verify", "run a named verification experiment");
    std::string experiment;
    ExperimentConfig cfg;
    verify->add_option("name", experiment, "haar|iid|sojourn|entropy|calcintegral|cocycle|coding|tree")
        ->required();
    verify->add_option("--depth", cfg.depth, "cylinder depth (haar)");
    verify->add_option("--horizon", cfg.horizon, "quotients each way (iid/coding)");
    verify->add_option("--max-degree", cfg.max_degree, "truncation degree (entropy/calcintegral)");
    verify->add_option("--quantile", cfg.quantile, "chi-square quantile");
    verify->add_option("--tol", cfg.tol, "relative tolerance (sojourn)");
    verify->add_flag("--bias", cfg.bias, "harness self-test: bias the tabulated samples");

    auto* entropy = app.add_subcommand("entropy", "entropy closed form vs series");
    int e_max_degree = 40;
    entropy->add_option("--max-degree", e_max_degree, "truncation degree");

    auto* distance = app.add_subcommand("distance", "tree distance between two vertex classes");
    std::string m1, m2;
    distance->add_option("--m1", m1, "first matrix a;b;c;d")->required();
    distance->add_option("--m2", m2, "second matrix a;b;c;d")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        cfg.seed = g.seed;
        cfg.samples = g.samples;
        cfg.prec = g.prec;
        if (cf->parsed()) {
            if (num.empty() == coeffs.empty())
                throw DomainError("cf needs exactly one of --num or --coeffs");
            return cmd_cf(g, num, den, coeffs, max_terms);
        }
        if (orbit->parsed()) return cmd_orbit(g, steps, onum, oden);
        if (code->parsed()) return cmd_code(g, n_back, n_fwd);
        if (verify->parsed()) return cmd_verify(g, experiment, cfg);
        if (entropy->parsed()) {
            ExperimentConfig ecfg = cfg;
            ecfg.max_degree = e_max_degree;
            return cmd_verify(g, "entropy", ecfg);
        }
        if (distance->parsed()) return cmd_distance(g, m1, m2);
        return kExitParse;
    } catch (const ParseError& e) {
        print_caret(e);
        return kExitParse;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
