#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "pariah/elliptic.hpp"
#include "pariah/lfunc.hpp"
#include "pariah/modfun.hpp"
#include "pariah/onan.hpp"
#include "pariah/quadforms.hpp"
#include "pariah/serialize.hpp"
#include "pariah/singmod.hpp"

using namespace pariah;
using nlohmann::json;

namespace {

long default_prec() {
    if (const char* env = std::getenv("PARIAH_PREC")) {
        long p = std::atol(env);
        if (p > 0) return p;
    }
    return 30;
}

json params_record(long prec, double tol, long prime_bound = 10000) {
    return json{{"prec", prec}, {"tol", tol}, {"prime_bound", prime_bound}};
}

qseries::FracSeries named_series(const std::string& fn, long prec) {
    using modfun::SeriesId;
    SeriesId id = modfun::series_from_name(fn);
    switch (id) {
        case SeriesId::J: return modfun::j_series(prec).series;
        case SeriesId::T3: return modfun::t3_series(prec).series;
        case SeriesId::T6: return modfun::t6_series(prec).series;
        case SeriesId::FON: return modfun::fon_series(prec).series;
        case SeriesId::FON3A: return modfun::fon3a_series(prec).series;
        case SeriesId::F15: return modfun::f15_series(prec).series;
        case SeriesId::HURWITZ: return modfun::hurwitz_series(prec).series;
        case SeriesId::THETA0: return qseries::theta_r(0, prec);
        case SeriesId::THETA1: return qseries::theta_r(1, prec);
    }
    throw Error("unreachable");
}

elliptic::WeierstrassCurve family_curve(const std::string& family, long twist, bool minimal) {
    if (minimal) {
        if (family == "E15" && twist == 1) return elliptic::WeierstrassCurve{1, 1, 1, -10, -10};
        throw Error("--minimal is only available for E15 with twist 1");
    }
    if (family == "E15") return elliptic::twist15(twist);
    if (family == "E14") return elliptic::twist14(twist);
    throw Error("unknown family: " + family + " (expected E15 or E14)");
}

std::string verdict_text(const onan::SelmerVerdict& v) {
    Int total = v.c3a_series + v.h;
    std::string s = "D=" + std::to_string(v.D) + " admissible; h=" + std::to_string(v.h) +
                    "; C3A=" + v.c3a_series.get_str() + "; C3A+h=" + total.get_str() + " = " +
                    std::to_string(v.congruence) + " (mod 5); Sel5 " +
                    (v.sel5_nontrivial ? "nontrivial" : "trivial");
    if (v.l_twist) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.10g", v.l_twist->value);
        s += "; L(E15xD,1)=" + std::string(buf);
        if (v.sha_statement == onan::ShaStatement::Applies)
            s += v.sha_mod5_divides ? "; #Sha = 0 (mod 5)" : "; #Sha != 0 (mod 5)";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pariah: eta quotients, class numbers, traces of singular moduli,\n"
                 "the order-3 O'Nan McKay-Thompson series, elliptic-curve local data,\n"
                 "L-values, and the mod-5 Selmer congruence criterion"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    long prec = default_prec();
    double tol = 1e-6;

    // ---- qexp
    auto* qexp = app.add_subcommand("qexp", "print the q-expansion of a named series");
    std::string qexp_fn = "J";
    long qexp_prec = 0;
    qexp->add_option("--fn", qexp_fn, "J|T3|T6|FON|FON3A|F15|HURWITZ|THETA0|THETA1");
    qexp->add_option("--prec", qexp_prec, "number of q-steps (default PARIAH_PREC or 30)");

    // ---- classnum
    auto* classnum = app.add_subcommand("classnum", "class number / Hurwitz number of D");
    long cn_D = 0;
    bool cn_hurwitz = false, cn_reps = false;
    classnum->add_option("-D,--discriminant", cn_D, "negative discriminant")->required();
    classnum->add_flag("--hurwitz", cn_hurwitz, "weighted (Hurwitz) count");
    classnum->add_flag("--reps", cn_reps, "list the reduced representatives");

    // ---- trace
    auto* trace = app.add_subcommand("trace", "trace of singular moduli");
    std::string tr_fn = "J";
    long tr_D = 0, tr_level = 1, tr_twist = 0;
    double tr_tol = tol;
    trace->add_option("--fn", tr_fn, "J|T3|T6|FON|FON3A");
    trace->add_option("-D,--discriminant", tr_D, "negative discriminant")->required();
    trace->add_option("--level", tr_level, "Gamma_0(N) level (default 1)");
    trace->add_option("--twist", tr_twist,
                      "twist discriminant: positive fundamental D0 at level 1, or D itself "
                      "for the residue-signed level-N variant");
    trace->add_option("--tol", tr_tol, "rounding budget (default 1e-6)");

    // ---- mt-series
    auto* mt = app.add_subcommand("mt-series", "O'Nan McKay-Thompson series");
    std::string mt_class = "3A";
    long mt_prec = 0;
    mt->add_option("--class", mt_class, "conjugacy class (only 3A is constructed)");
    mt->add_option("--prec", mt_prec, "number of q-steps");

    // ---- curve
    auto* curve = app.add_subcommand("curve", "Weierstrass model data");
    std::string cv_family = "E15";
    long cv_twist = 1;
    std::string cv_ap;
    bool cv_torsion = false, cv_minimal = false;
    curve->add_option("--family", cv_family, "E15 or E14");
    curve->add_option("--twist", cv_twist, "twist discriminant D (default 1)");
    curve->add_option("--ap", cv_ap, "comma-separated primes for a_E(p)");
    curve->add_flag("--torsion", cv_torsion, "compute the torsion subgroup");
    curve->add_flag("--minimal", cv_minimal, "use the reduced global minimal model (E15 only)");

    // ---- lvalue
    auto* lvalue = app.add_subcommand("lvalue", "L(1) of the level-15 newform or a twist");
    std::string lv_family = "E15";
    long lv_twist = 1;
    double lv_tol = 1e-8;
    lvalue->add_option("--family", lv_family, "E15 (the only family with an eta-product form)");
    lvalue->add_option("--twist", lv_twist, "negative fundamental twist discriminant");
    lvalue->add_option("--tol", lv_tol, "tail tolerance");

    // ---- selmer
    auto* selmer = app.add_subcommand("selmer", "Selmer congruence criterion for one D");
    long sel_D = 0;
    bool sel_lvalue = false, sel_traces = false;
    selmer->add_option("-D,--discriminant", sel_D, "admissible negative fundamental D")->required();
    selmer->add_flag("--with-lvalue", sel_lvalue, "also compute L(E15xD, 1) and the Sha clause");
    selmer->add_flag("--with-traces", sel_traces, "cross-check the series route with CM traces");

    // ---- scan
    auto* scan = app.add_subcommand("scan", "criterion for every admissible D in a range");
    long sc_from = -100, sc_to = -1;
    std::string sc_out;
    bool sc_lvalue = false, sc_traces = false;
    scan->add_option("--from", sc_from, "lower end (most negative D)");
    scan->add_option("--to", sc_to, "upper end (closest to 0)");
    scan->add_option("--out", sc_out, "write JSON lines to this file");
    scan->add_flag("--with-lvalue", sc_lvalue, "include twisted L-values");
    scan->add_flag("--with-traces", sc_traces, "cross-check each D with CM traces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*qexp) {
            long p = qexp_prec > 0 ? qexp_prec : prec;
            qseries::FracSeries s = named_series(qexp_fn, p);
            if (as_json) {
                json terms = json::array();
                for (long n = s.lo(); n < s.prec_num(); ++n) {
                    Rat c = s.coeff(n, s.denom());
                    if (c != 0)
                        terms.push_back({{"num", n}, {"den", s.denom()}, {"coeff", c.get_str()}});
                }
                std::cout << json{{"fn", qexp_fn},
                                  {"terms", terms},
                                  {"prec_num", s.prec_num()},
                                  {"denom", s.denom()},
                                  {"params", params_record(p, tol)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << s.str(64) << "\n";
            }
        } else if (*classnum) {
            auto cl = quadforms::enumerate_reduced(cn_D);
            Rat h = cn_hurwitz ? quadforms::hurwitz_number(cn_D) : Rat(static_cast<long>(cl.reps.size()));
            if (as_json) {
                json reps = json::array();
                for (size_t i = 0; i < cl.reps.size(); ++i)
                    reps.push_back({{"A", cl.reps[i].a.get_str()},
                                    {"B", cl.reps[i].b.get_str()},
                                    {"C", cl.reps[i].c.get_str()},
                                    {"weight", cl.weights[i].get_str()}});
                std::cout << json{{"D", cn_D},
                                  {"h", h.get_str()},
                                  {"hurwitz", cn_hurwitz},
                                  {"reps", reps}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << (cn_hurwitz ? "H(" : "h(") << cn_D << ")=" << h << "\n";
                if (cn_reps)
                    for (auto& f : cl.reps)
                        std::cout << "(" << f.a << "," << f.b << "," << f.c << ")\n";
            }
        } else if (*trace) {
            modfun::SeriesId id = modfun::series_from_name(tr_fn);
            singmod::CMValueReport r;
            if (tr_twist == 0) {
                r = singmod::trace(id, tr_level, tr_D, tr_tol);
            } else if (tr_level == 1) {
                r = singmod::twisted_trace(id, tr_D, tr_twist, tr_tol);
            } else {
                if (tr_twist != tr_D)
                    throw Error("level-N twisted traces support only --twist equal to D");
                r = singmod::twisted_trace_level(id, tr_level, tr_D, tr_tol);
            }
            if (as_json) {
                json j{{"fn", tr_fn},       {"D", tr_D},
                       {"level", tr_level}, {"twist", tr_twist},
                       {"value_re", r.value.real()}, {"value_im", r.value.imag()},
                       {"tail_bound", r.tail_bound}, {"params", params_record(prec, tr_tol)}};
                if (r.rounded) j["rounded"] = r.rounded->get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "tr";
                if (tr_level != 1) std::cout << "_" << tr_level;
                std::cout << "(" << tr_fn << "|" << tr_D;
                if (tr_twist) std::cout << ", twist " << tr_twist;
                std::cout << ") = ";
                if (r.rounded) std::cout << *r.rounded;
                else std::cout << r.value.real();
                std::cout << "  (error bound " << r.tail_bound << ")\n";
            }
        } else if (*mt) {
            if (mt_class != "3A") throw Error("only the class 3A series is constructed");
            long p = mt_prec > 0 ? mt_prec : prec;
            modfun::VectorPair vp = modfun::fon_mt_3a(p);
            if (as_json) {
                auto dump_comp = [](const qseries::FracSeries& s) {
                    json terms = json::array();
                    for (long n = s.lo(); n < s.prec_num(); ++n) {
                        Rat c = s.coeff(n, s.denom());
                        if (c != 0)
                            terms.push_back({{"num", n}, {"den", s.denom()}, {"coeff", c.get_str()}});
                    }
                    return json{{"denom", s.denom()}, {"terms", terms}};
                };
                std::cout << json{{"class", "3A"},
                                  {"comp0", dump_comp(vp.comp0)},
                                  {"comp1", dump_comp(vp.comp1)},
                                  {"params", params_record(p, tol)}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "F_3A,0 = " << vp.comp0.str(64) << "\n";
                std::cout << "F_3A,1 = " << vp.comp1.str(64) << "\n";
            }
        } else if (*curve) {
            auto e = family_curve(cv_family, cv_twist, cv_minimal);
            json j{{"family", cv_family}, {"twist", cv_twist}};
            std::string text = cv_family + " x " + std::to_string(cv_twist) + ": ";
            if (e.is_short()) {
                text += "y^2 = x^3 + (" + e.a4.get_str() + ")x + (" + e.a6.get_str() + ")";
            } else {
                text += "y^2 + " + e.a1.get_str() + "xy + " + e.a3.get_str() + "y = x^3 + " +
                        e.a2.get_str() + "x^2 + (" + e.a4.get_str() + ")x + (" + e.a6.get_str() + ")";
            }
            j["a_invariants"] = {e.a1.get_str(), e.a2.get_str(), e.a3.get_str(), e.a4.get_str(),
                                 e.a6.get_str()};
            j["discriminant"] = elliptic::discriminant(e).get_str();
            if (e.is_short()) j["j_invariant"] = elliptic::j_invariant(e).get_str();
            if (!as_json) std::cout << text << "\n  disc = " << elliptic::discriminant(e) << "\n";
            if (!cv_ap.empty()) {
                json aps = json::array();
                std::stringstream ss(cv_ap);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    long p = std::stol(tok);
                    long a = elliptic::ap(e, p);
                    aps.push_back({{"p", p}, {"ap", a}});
                    if (!as_json) std::cout << "  a_" << p << " = " << a << "\n";
                }
                j["ap"] = aps;
            }
            if (cv_torsion) {
                auto tor = elliptic::torsion_subgroup(e);
                std::string desc = "trivial";
                if (!tor.empty()) {
                    desc.clear();
                    for (size_t i = 0; i < tor.size(); ++i)
                        desc += (i ? " x " : "") + std::string("Z/") + std::to_string(tor[i]);
                }
                j["torsion"] = tor;
                if (!as_json) std::cout << "  torsion = " << desc << "\n";
            }
            if (as_json) std::cout << j.dump() << "\n";
        } else if (*lvalue) {
            if (lv_family != "E15") throw Error("lvalue: only family E15 is supported");
            lfunc::LValueReport r;
            if (lv_twist == 1) {
                r = lfunc::l_value_at_1(lfunc::a_coeffs(400), 15, 1, lv_tol);
            } else {
                r = lfunc::twisted_l_value(lv_twist, lv_tol);
            }
            if (as_json) {
                std::cout << json{{"family", lv_family},
                                  {"twist", lv_twist},
                                  {"value", r.value},
                                  {"sign", r.sign},
                                  {"terms_used", r.terms_used},
                                  {"tail_estimate", r.tail_estimate},
                                  {"params", params_record(prec, lv_tol)}}
                                 .dump()
                          << "\n";
            } else {
                std::printf("L(E15 x %ld, 1) = %.10f  (sign %+d, %ld terms, tail <= %.3g)\n",
                            lv_twist, r.value, r.sign, r.terms_used, r.tail_estimate);
            }
        } else if (*selmer) {
            onan::SelmerOptions opts;
            opts.with_traces = sel_traces;
            opts.with_lvalue = sel_lvalue;
            opts.prec = prec;
            auto v = onan::selmer_criterion(sel_D, opts);
            if (as_json) {
                json j = v;
                j["params"] = params_record(opts.prec, opts.tol);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << verdict_text(v) << "\n";
            }
        } else if (*scan) {
            onan::SelmerOptions opts;
            opts.with_traces = sc_traces;
            opts.with_lvalue = sc_lvalue;
            opts.prec = prec;
            auto vs = onan::scan(sc_from, sc_to, opts);
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!sc_out.empty()) {
                file.open(sc_out);
                if (!file) throw Error("cannot open " + sc_out);
                os = &file;
            }
            for (const auto& v : vs) {
                if (as_json || !sc_out.empty()) {
                    json j = v;
                    j["params"] = params_record(opts.prec, opts.tol);
                    *os << j.dump() << "\n";
                } else {
                    *os << verdict_text(v) << "\n";
                }
            }
            if (!sc_out.empty())
                std::cout << vs.size() << " verdicts written to " << sc_out << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
