#include "ipoly/cli.hpp"

#include "ipoly/asympt.hpp"
#include "ipoly/checks.hpp"
#include "ipoly/families.hpp"
#include "ipoly/regions.hpp"
#include "ipoly/rootfind.hpp"
#include "ipoly/serial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ipoly::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitCheckFail = 4;

struct Global {
    unsigned prec_bits = 256;
    double tol = 1e-30;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_file;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigComplex parse_point(const std::string& s, mpfr_prec_t prec) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return {BigFloat::from_string(s, prec), BigFloat(prec)};
    return {BigFloat::from_string(s.substr(0, comma), prec),
            BigFloat::from_string(s.substr(comma + 1), prec)};
}

std::vector<unsigned> parse_range(const std::string& s) {
    std::vector<unsigned> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        unsigned a = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
        unsigned b = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
        if (b < a) throw UsageError("empty range '" + s + "'");
        for (unsigned n = a; n <= b; ++n) out.push_back(n);
        return out;
    }
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (out.empty()) throw UsageError("empty n-range '" + s + "'");
    return out;
}

/// "n" -> n, "n+1" -> n+1, decimal -> fixed value.
unsigned apply_rule(const std::string& rule, unsigned n) {
    if (rule == "n") return n;
    if (rule == "n+1") return n + 1;
    return static_cast<unsigned>(std::stoul(rule));
}

FamilySpec::Kind family_kind(const std::string& name) {
    if (name == "bcd") return FamilySpec::Kind::BCD;
    if (name == "binom") return FamilySpec::Kind::BinomPow;
    if (name == "legendre") return FamilySpec::Kind::LegendreMonic;
    if (name == "ultra") return FamilySpec::Kind::UltraMonic;
    if (name == "chebyshev") return FamilySpec::Kind::ChebyshevMonic;
    throw UsageError("unknown family '" + name + "'");
}

json header_json(const Global& g, const std::string& command) {
    return {{"schema", "ipoly/v1"},
            {"command", command},
            {"prec_bits", g.prec_bits},
            {"tol", g.tol},
            {"seed", g.seed}};
}

void emit(const Global& g, std::ostream& out, const json& doc, const std::string& csv) {
    std::ostream* os = &out;
    std::ofstream file;
    if (!g.out_file.empty()) {
        file.open(g.out_file);
        if (!file) throw UsageError("cannot open output file '" + g.out_file + "'");
        os = &file;
    }
    if (g.format == "csv")
        *os << csv;
    else
        *os << doc.dump(2) << "\n";
}

// ---- subcommand payloads ---------------------------------------------------

struct GenArgs {
    std::string family;
    unsigned n = 0, m = 0, alpha = 0;
};

struct IntegrateArgs {
    GenArgs fam;
    unsigned iterate = 1;
    std::string lambda = "0";
};

struct ZerosArgs {
    std::string family;
    std::string n_range;
    std::string m_rule = "n";
    std::string iterate = "n";
    std::string lambda = "0";
    std::string region_map = "auto";
    unsigned alpha = 0;
    unsigned max_iter = 400;
};

struct CurveArgs {
    std::string name;
    unsigned N = 256;
    std::string lambda = "2";
    double r = 1.0;
};

struct RegionArgs {
    std::string kind;
    std::string z;
    std::string lambda = "2";
    double tol = -1.0;  // <0: default band
};

struct RatioArgs {
    std::string model;
    unsigned alpha = 0, m = 1;
    std::string z;
    std::string n_list = "50,100,200";
};

struct NthRootArgs {
    GenArgs fam;
    std::string z;
};

struct MarkovArgs {
    std::string z;
    unsigned nodes = 64;
};

struct IntRatioArgs {
    std::string base = "on-arc";
    unsigned n = 200, m = 1;
    std::string lambda;
    std::string z;
};

struct PathIntArgs {
    unsigned n = 200;
    std::string z1, z2;
};

struct CheckArgs {
    std::string suite;
    unsigned n_max = 0;
};

RatPoly make_family(const GenArgs& a) {
    FamilySpec spec;
    spec.kind = family_kind(a.family);
    spec.n = a.n;
    spec.m = a.m;
    spec.alpha = a.alpha;
    return spec.generate();
}

int do_gen(const Global& g, const GenArgs& a, std::ostream& out) {
    RatPoly p = make_family(a);
    json doc = header_json(g, "gen");
    doc["family"] = a.family;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["alpha"] = a.alpha;
    doc["coeffs"] = serial::coeffs_to_json(p);
    emit(g, out, doc, serial::coeffs_to_csv(p));
    return kExitOk;
}

int do_integrate(const Global& g, const IntegrateArgs& a, std::ostream& out) {
    RatPoly p = make_family(a.fam);
    RatPoly integ = iterated_integral(p, a.iterate, GaussRat::parse(a.lambda));
    json doc = header_json(g, "integrate");
    doc["family"] = a.fam.family;
    doc["n"] = a.fam.n;
    doc["iterate"] = a.iterate;
    doc["lambda"] = a.lambda;
    doc["coeffs"] = serial::coeffs_to_json(integ);
    emit(g, out, doc, serial::coeffs_to_csv(integ));
    return kExitOk;
}

int do_zeros(const Global& g, const ZerosArgs& a, std::ostream& out) {
    auto kind = family_kind(a.family);
    std::string region_map = a.region_map;
    if (region_map == "auto") {
        if (kind == FamilySpec::Kind::BCD || kind == FamilySpec::Kind::BinomPow)
            region_map = "e";
        else if (kind == FamilySpec::Kind::ChebyshevMonic)
            region_map = "none";
        else
            region_map = "f";
    }
    std::vector<serial::ZerosRecord> recs;
    bool all_converged = true;
    for (unsigned n : parse_range(a.n_range)) {
        RatPoly p;
        unsigned m = 0;
        if (kind == FamilySpec::Kind::BCD) {
            m = apply_rule(a.m_rule, n);
            p = bcd(n, m);
        } else {
            GenArgs fa{a.family, n, 0, a.alpha};
            p = make_family(fa);
            m = apply_rule(a.iterate, n);
            if (m > 0) p = iterated_integral(p, m, GaussRat::parse(a.lambda));
        }
        RootOptions ro;
        ro.prec = g.prec_bits;
        ro.tol = g.tol;
        ro.seed = g.seed;
        ro.max_iter = a.max_iter;
        RootSet rs = roots(p, ro);
        all_converged = all_converged && rs.converged;
        serial::ZerosRecord rec;
        rec.n = n;
        rec.m = m;
        rec.degree = rs.degree;
        rec.converged = rs.converged;
        rec.iterations = rs.iterations;
        rec.roots = rs.roots;
        rec.residuals = rs.residuals;
        for (const auto& z : rs.roots) {
            if (region_map == "none" || z.is_zero()) {
                rec.regions.emplace_back("-");
                rec.on_boundary.push_back(false);
            } else {
                RegionLabel lab = region_map == "e" ? classify_E(z) : classify_F(z);
                rec.regions.push_back(region_name(lab.region));
                rec.on_boundary.push_back(lab.on_boundary);
            }
        }
        recs.push_back(std::move(rec));
    }
    json doc = header_json(g, "zeros");
    doc["family"] = a.family;
    doc["m_rule"] = kind == FamilySpec::Kind::BCD ? a.m_rule : a.iterate;
    doc["lambda"] = a.lambda;
    doc["alpha"] = a.alpha;
    doc["records"] = serial::zeros_to_json(recs);
    emit(g, out, doc, serial::zeros_to_csv(recs));
    return all_converged ? kExitOk : kExitNoConverge;
}

int do_curve(const Global& g, const CurveArgs& a, std::ostream& out) {
    const mpfr_prec_t prec = g.prec_bits;
    CurveSamples cs;
    if (a.name == "gamma") {
        cs = gamma_samples(a.N, prec);
    } else if (a.name == "gamma_pre") {
        CurveSamples base = gamma_samples(a.N, prec);
        cs.name = "gamma_pre";
        for (std::size_t pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < base.points.size(); ++i) {
                BigComplex w = sqrt(-base.points[i]);
                cs.points.push_back(pass == 0 ? w : -w);
                cs.parameter.push_back(base.parameter[i]);
            }
        }
    } else if (a.name == "cardioid") {
        cs = cardioid_boundary(parse_point(a.lambda, prec), BigFloat(a.r, prec), a.N);
    } else if (a.name == "level") {
        cs = level_curve_interval(parse_point(a.lambda, prec), a.N);
    } else {
        throw UsageError("unknown curve '" + a.name + "'");
    }
    json doc = header_json(g, "curve");
    doc["N"] = a.N;
    doc["curve"] = serial::curve_to_json(cs);
    emit(g, out, doc, serial::curve_to_csv(cs));
    return kExitOk;
}

int do_region(const Global& g, const RegionArgs& a, std::ostream& out) {
    const mpfr_prec_t prec = g.prec_bits;
    BigComplex z = parse_point(a.z, prec);
    BigFloat tol = a.tol >= 0 ? BigFloat(a.tol, prec) : boundary_tol(prec);
    RegionLabel lab;
    if (a.kind == "e")
        lab = classify_E(z, tol);
    else if (a.kind == "f")
        lab = classify_F(z, tol);
    else if (a.kind == "level")
        lab = classify_level_interval(z, parse_point(a.lambda, prec), tol);
    else
        throw UsageError("unknown region kind '" + a.kind + "'");
    json doc = header_json(g, "region");
    doc["kind"] = a.kind;
    doc["z"] = {{"re", z.real().str()}, {"im", z.imag().str()}};
    doc["region"] = region_name(lab.region);
    doc["boundary_dist"] = lab.boundary_dist.str();
    doc["on_boundary"] = lab.on_boundary;
    std::string csv = "kind,re,im,region,boundary_dist,on_boundary\n" + a.kind + "," +
                      z.real().str() + "," + z.imag().str() + "," + region_name(lab.region) + "," +
                      lab.boundary_dist.str() + "," + (lab.on_boundary ? "1" : "0") + "\n";
    emit(g, out, doc, csv);
    return kExitOk;
}

AsymptoticModel parse_model(const RatioArgs& a) {
    AsymptoticModel m;
    if (a.model == "qnn") m.family = AsymptoticModel::Family::Qnn;
    else if (a.model == "qnn1") m.family = AsymptoticModel::Family::Qnn1;
    else if (a.model == "ultra-even") m.family = AsymptoticModel::Family::UltraEven;
    else if (a.model == "ultra-odd") m.family = AsymptoticModel::Family::UltraOdd;
    else if (a.model == "fixed-m") m.family = AsymptoticModel::Family::FixedM;
    else throw UsageError("unknown model '" + a.model + "'");
    m.alpha = a.alpha;
    m.m = a.m;
    return m;
}

int do_ratio(const Global& g, const RatioArgs& a, std::ostream& out) {
    AsymptoticModel model = parse_model(a);
    json records = json::array();
    std::string csv = "n,ratio_error\n";
    for (unsigned n : parse_range(a.n_list)) {
        mpfr_prec_t prec = std::max<mpfr_prec_t>(g.prec_bits, 4 * n);
        BigFloat err = ratio_error(model, n, parse_point(a.z, prec));
        records.push_back({{"n", n}, {"ratio_error", err.str()}});
        csv += std::to_string(n) + "," + err.str() + "\n";
    }
    json doc = header_json(g, "asympt.ratio");
    doc["model"] = a.model;
    doc["z"] = a.z;
    doc["records"] = records;
    emit(g, out, doc, csv);
    return kExitOk;
}

int do_nthroot(const Global& g, const NthRootArgs& a, std::ostream& out) {
    RatPoly p = make_family(a.fam);
    mpfr_prec_t prec = std::max<mpfr_prec_t>(g.prec_bits, 4 * a.fam.n);
    BigFloat v = nth_root(p, parse_point(a.z, prec));
    json doc = header_json(g, "asympt.nthroot");
    doc["family"] = a.fam.family;
    doc["n"] = a.fam.n;
    doc["m"] = a.fam.m;
    doc["value"] = v.str();
    emit(g, out, doc, "value\n" + v.str() + "\n");
    return kExitOk;
}

int do_markov(const Global& g, const MarkovArgs& a, std::ostream& out) {
    BigFloat v = markov_check(parse_point(a.z, g.prec_bits), a.nodes);
    json doc = header_json(g, "asympt.markov");
    doc["nodes"] = a.nodes;
    doc["error"] = v.str();
    emit(g, out, doc, "error\n" + v.str() + "\n");
    return kExitOk;
}

int do_intratio(const Global& g, const IntRatioArgs& a, std::ostream& out) {
    const mpfr_prec_t prec = g.prec_bits;
    BigComplex z = parse_point(a.z, prec);
    BigComplex v =
        a.base == "off-arc"
            ? integral_ratio_off_arc(a.n, a.m,
                                     GaussRat::parse(a.lambda.empty() ? "3" : a.lambda), z)
            : integral_ratio_on_arc(a.n, a.m, z,
                                    GaussRat::parse(a.lambda.empty() ? "0" : a.lambda));
    json doc = header_json(g, "asympt.intratio");
    doc["base"] = a.base;
    doc["n"] = a.n;
    doc["m"] = a.m;
    doc["value"] = {{"re", v.real().str()}, {"im", v.imag().str()}};
    emit(g, out, doc, "re,im\n" + v.real().str() + "," + v.imag().str() + "\n");
    return kExitOk;
}

int do_pathint(const Global& g, const PathIntArgs& a, std::ostream& out) {
    const mpfr_prec_t prec = g.prec_bits;
    BigFloat v = path_integral_nthroot(a.n, parse_point(a.z1, prec), parse_point(a.z2, prec));
    json doc = header_json(g, "asympt.pathint");
    doc["n"] = a.n;
    doc["value"] = v.str();
    emit(g, out, doc, "value\n" + v.str() + "\n");
    return kExitOk;
}

int do_check(const Global& g, const CheckArgs& a, std::ostream& out) {
    checks::Options opt;
    opt.seed = g.seed;
    opt.n_max = a.n_max;
    auto results = checks::run_suite(a.suite, opt);
    bool pass = checks::all_passed(results);
    // reports carry no timing so identical runs emit identical bytes
    json arr = json::array();
    std::string csv = "id,name,pass,informational,details\n";
    for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"informational", r.informational},
                       {"details", r.details}});
        csv += std::to_string(r.id) + "," + serial::csv_escape(r.name) + "," +
               (r.pass ? "1" : "0") + "," + (r.informational ? "1" : "0") + "," +
               serial::csv_escape(r.details) + "\n";
    }
    json doc = header_json(g, "check");
    doc["suite"] = a.suite;
    doc["n_max"] = a.n_max;
    doc["pass"] = pass;
    doc["criteria"] = arr;
    emit(g, out, doc, csv);
    return pass ? kExitOk : kExitCheckFail;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact iterated integrals of polynomials, their zeros, and their asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--prec-bits", g.prec_bits, "working precision in bits (>= 64)")
        ->check(CLI::Range(64u, 1u << 24));
    app.add_option("--tol", g.tol, "relative residual tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for any randomized sweep");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_file, "write output to a file instead of stdout");

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "emit exact coefficients of a family member")->fallthrough();
    cgen->add_option("family", gen.family, "bcd|binom|legendre|ultra|chebyshev")->required();
    cgen->add_option("--n", gen.n, "degree index")->required();
    cgen->add_option("--m", gen.m, "second index (bcd)");
    cgen->add_option("--alpha", gen.alpha, "ultraspherical parameter offset");

    IntegrateArgs integ;
    auto* cint = app.add_subcommand("integrate", "m-fold integral of a family member")->fallthrough();
    cint->add_option("family", integ.fam.family)->required();
    cint->add_option("--n", integ.fam.n)->required();
    cint->add_option("--m", integ.fam.m);
    cint->add_option("--alpha", integ.fam.alpha);
    cint->add_option("--iterate", integ.iterate, "number of integrations")->required();
    cint->add_option("--lambda", integ.lambda, "exact base point, e.g. '0', '1/2', '0+1/2i'");

    ZerosArgs zr;
    auto* czer = app.add_subcommand("zeros", "residual-certified zeros over an n sweep")->fallthrough();
    czer->add_option("family", zr.family)->required();
    czer->add_option("--n", zr.n_range, "single n, 'a..b', or comma list")->required();
    czer->add_option("--m-rule", zr.m_rule, "bcd second index: 'n', 'n+1', or fixed integer");
    czer->add_option("--iterate", zr.iterate, "integrations for non-bcd families: 'n' or integer");
    czer->add_option("--lambda", zr.lambda, "exact base point of the integral");
    czer->add_option("--alpha", zr.alpha);
    czer->add_option("--max-iter", zr.max_iter);
    czer->add_option("--region-map", zr.region_map)->check(CLI::IsMember({"auto", "e", "f", "none"}));

    CurveArgs cv;
    auto* ccur = app.add_subcommand("curve", "sample a named curve")->fallthrough();
    ccur->add_option("name", cv.name, "gamma|gamma_pre|cardioid|level")->required();
    ccur->add_option("--N", cv.N, "number of samples");
    ccur->add_option("--lambda", cv.lambda, "complex point 're,im' (cardioid/level)");
    ccur->add_option("--r", cv.r, "cardioid radius parameter");

    RegionArgs rg;
    auto* creg = app.add_subcommand("region", "classify a point")->fallthrough();
    creg->add_option("kind", rg.kind, "e|f|level")->required();
    creg->add_option("--z", rg.z, "point 're,im'")->required();
    creg->add_option("--lambda", rg.lambda, "level-curve base point 're,im'");
    creg->add_option("--tol", rg.tol, "boundary tolerance (default 2^{-prec/2})");

    auto* casy = app.add_subcommand("asympt", "asymptotic diagnostics")->fallthrough();
    casy->require_subcommand(1);
    RatioArgs ra;
    auto* cratio = casy->add_subcommand("ratio", "ratio error against the closed-form limit")->fallthrough();
    cratio->add_option("--model", ra.model, "qnn|qnn1|ultra-even|ultra-odd|fixed-m")->required();
    cratio->add_option("--alpha", ra.alpha);
    cratio->add_option("--m", ra.m);
    cratio->add_option("--z", ra.z)->required();
    cratio->add_option("--n-list", ra.n_list);
    NthRootArgs na;
    auto* cnth = casy->add_subcommand("nthroot", "|p(z)|^{1/deg}")->fallthrough();
    cnth->add_option("--family", na.fam.family)->default_val("bcd");
    cnth->add_option("--n", na.fam.n)->required();
    cnth->add_option("--m", na.fam.m);
    cnth->add_option("--alpha", na.fam.alpha);
    cnth->add_option("--z", na.z)->required();
    MarkovArgs ma;
    auto* cmar = casy->add_subcommand("markov", "quadrature vs psi on [-1,1]")->fallthrough();
    cmar->add_option("--z", ma.z)->required();
    cmar->add_option("--nodes", ma.nodes);
    IntRatioArgs ta;
    auto* cth3 = casy->add_subcommand("intratio", "ratio of phi_n to its m-fold integral")->fallthrough();
    cth3->add_option("--base", ta.base, "base point location relative to [-1,1]")
        ->check(CLI::IsMember({"on-arc", "off-arc"}));
    cth3->add_option("--n", ta.n);
    cth3->add_option("--m", ta.m);
    cth3->add_option("--lambda", ta.lambda, "exact base point");
    cth3->add_option("--z", ta.z)->required();
    PathIntArgs pa;
    auto* cpi = casy->add_subcommand("pathint", "n-th root of a path integral")->fallthrough();
    cpi->add_option("--n", pa.n);
    cpi->add_option("--z1", pa.z1)->required();
    cpi->add_option("--z2", pa.z2)->required();

    CheckArgs ck;
    auto* cchk = app.add_subcommand("check", "run a verification suite")->fallthrough();
    cchk->add_option("suite", ck.suite, "exact|asympt|zeros|bounds|all")->required();
    cchk->add_option("--n-max", ck.n_max, "clamp sweep sizes (thresholds stay full-scale)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*cgen) return do_gen(g, gen, out);
        if (*cint) return do_integrate(g, integ, out);
        if (*czer) return do_zeros(g, zr, out);
        if (*ccur) return do_curve(g, cv, out);
        if (*creg) return do_region(g, rg, out);
        if (*casy) {
            if (*cratio) return do_ratio(g, ra, out);
            if (*cnth) return do_nthroot(g, na, out);
            if (*cmar) return do_markov(g, ma, out);
            if (*cth3) return do_intratio(g, ta, out);
            if (*cpi) return do_pathint(g, pa, out);
        }
        if (*cchk) return do_check(g, ck, out);
        err << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace ipoly::cli
