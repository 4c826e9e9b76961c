// Command-line frontend. Every subcommand prints one structured JSON
// document on stdout with keys in a fixed order, so identical invocations
// produce identical bytes. Exact integers and rationals are rendered as
// decimal strings; approximate fields carry their precision.
//
// Exit codes: 0 success, 1 invalid input, 2 internal verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#include "picf/cf.hpp"
#include "picf/families.hpp"
#include "picf/pell.hpp"
#include "picf/tower.hpp"
#include "picf/variety.hpp"

using json = nlohmann::ordered_json;
using namespace picf;

namespace {

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

json to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) {
        arr.push_back(str(x));
    }
    return arr;
}

json to_json(const PCF& p) {
    return json{{"preperiod", to_json(p.preperiod)}, {"period", to_json(p.period)}};
}

json to_json(const Surd& s) {
    return json{{"a", str(s.a())}, {"b", str(s.b())}, {"m", str(s.m())},
                {"display", s.str()}};
}

json to_json(const Mat2<Int>& e) {
    return json{{"e11", str(e.e11)}, {"e12", str(e.e12)}, {"e21", str(e.e21)},
                {"e22", str(e.e22)}};
}

json to_json(const VarietyPoint& p) {
    json arr = json::array();
    arr.push_back(str(p.b1));
    for (const Int& x : p.a) {
        arr.push_back(str(x));
    }
    return arr;
}

json to_json(const ConvergenceReport& rep) {
    json shifts = json::array();
    for (const ShiftWitness& w : rep.shifts) {
        shifts.push_back(json{{"word", to_json(w.word)},
                              {"m21", str(w.m21)},
                              {"m22", str(w.m22)},
                              {"ok", w.ok}});
    }
    return json{{"e_matrix", to_json(rep.e)},
                {"cond1_not_identity", rep.cond1},
                {"cond2_shifts", shifts},
                {"cond2", rep.cond2},
                {"trace", str(rep.trace)},
                {"signed_trace_sq", str(rep.signed_trace_sq)},
                {"cond3", rep.cond3},
                {"verdict", rep.verdict()}};
}

json to_json(const ConvergentSolution& s) {
    return json{{"x", str(s.x)}, {"y", str(s.y)}, {"norm_value", str(s.norm_value)},
                {"is_unit", s.is_unit}};
}

json to_json(const TowerElem& x) {
    return json{{"level", x.level()}, {"coords", to_json(x.coords())}};
}

json point_record(const VarietyPoint& pt) {
    PCF p = pt.to_pcf();
    ConvergenceReport rep = convergence_check(p);
    json rec{{"point", to_json(pt)},
             {"pcf", to_json(p)},
             {"convergence", to_json(rep)}};
    if (rep.converges()) {
        PcfEigen eg = pcf_eigen(p);
        if (eg.has_value) {
            rec["value"] = to_json(eg.value);
            rec["sign"] = eg.value.sign();
            rec["lambda_plus"] = to_json(eg.lambda_plus);
        }
    }
    return rec;
}

// Closed-form Pell solution attached to each family (the (l-1)th convergent
// of the periodic expansion, written out as a polynomial in s and t).
json closed_form_solution(FamilyId fam, const Int& s, const Int& t) {
    Int x, y;
    switch (fam) {
        case FamilyId::M1:
            x = t;
            y = 1;
            break;
        case FamilyId::M2:
            x = 2 * s * s * t + 1;
            y = 2 * s;
            break;
        case FamilyId::M2P:
            x = s * s * t + 1;
            y = s;
            break;
        case FamilyId::M3:
            x = 16 * t * s * s * s * s + 4 * s * s * s + 8 * t * s * s + 3 * s + t;
            y = 4 * s * s + 1;
            break;
    }
    Int norm = x * x - family_eval(fam, s, t) * y * y;
    return json{{"x", str(x)}, {"y", str(y)}, {"norm_value", str(norm)}};
}

struct Timing {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

void render_text(const json& v, const std::string& path, std::ostream& os) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            render_text(val, path.empty() ? key : path + "." + key, os);
        }
    } else if (v.is_array()) {
        size_t i = 0;
        for (const auto& val : v) {
            render_text(val, path + "[" + std::to_string(i++) + "]", os);
        }
        if (v.empty()) {
            os << path << " = []\n";
        }
    } else {
        os << path << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

bool g_text_mode = false;

// Timing goes to stderr (opt-in) so stdout stays byte-stable.
void emit(const json& doc, const Timing& timing, bool show_timing) {
    if (g_text_mode) {
        render_text(doc, "", std::cout);
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    if (show_timing) {
        std::cerr << "elapsed_ms " << timing.ms() << "\n";
    }
}

int exit_invalid(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact periodic integer continued fractions of quadratic surds"};
    app.require_subcommand(1);
    bool show_timing = false;
    app.add_flag("--timing", show_timing, "print elapsed time to stderr");
    app.add_flag("--text", g_text_mode, "flat human-readable output instead of JSON");

    std::string m_str, s_str, t_str, family_str;
    int period_l = 1;
    int level_n = 1;
    std::string brute_str;
    int threads = 1;
    long precision = 256;
    int iters = 200;

    auto* cmd_expand = app.add_subcommand("expand", "canonical regular expansion of sqrt(m)");
    cmd_expand->add_option("m", m_str, "radicand (non-square, >= 2)")->required();

    auto* cmd_picf =
        app.add_subcommand("picf", "all period-l integer expansions of +-sqrt(m)");
    cmd_picf->add_option("m", m_str)->required();
    cmd_picf->add_option("--period", period_l, "period length (1, 2 or 3)")->required();

    auto* cmd_variety = app.add_subcommand("variety", "integer points on the period-l variety");
    cmd_variety->add_option("m", m_str)->required();
    cmd_variety->add_option("l", period_l)->required();
    cmd_variety->add_option("--brute", brute_str, "also run the box search with this bound");
    cmd_variety->add_option("--threads", threads, "brute-force worker threads");

    auto* cmd_pell = app.add_subcommand("pell", "fundamental solution of x^2 - m y^2 = +-1");
    cmd_pell->add_option("m", m_str)->required();

    auto* cmd_family = app.add_subcommand("family", "closed-form family data for (s, t)");
    cmd_family->add_option("id", family_str, "M1 | M2 | M2P | M3")->required();
    cmd_family->add_option("s", s_str)->required();
    cmd_family->add_option("t", t_str)->required();

    auto* cmd_tower = app.add_subcommand("tower", "period-3 expansion of the tower generator");
    cmd_tower->add_option("n", level_n, "tower level (>= 1)")->required();
    cmd_tower->add_option("--precision", precision, "bits for numeric embeddings");
    cmd_tower->add_option("--iters", iters, "period applications for the numeric check");

    CLI11_PARSE(app, argc, argv);
    Timing timing;

    try {
        if (*cmd_expand) {
            Int m(m_str);
            PCF rcf = sqrt_rcf(m);
            json doc{{"command", "expand"},
                     {"inputs", json{{"m", str(m)}}},
                     {"outputs", json{{"rcf", to_json(rcf)},
                                      {"period_length", rcf.period.size()},
                                      {"value", to_json(pcf_value(rcf))}}},
                     {"errata", json::array()}};
            emit(doc, timing, show_timing);
            return 0;
        }

        if (*cmd_picf) {
            Int m(m_str);
            json points = json::array();
            for (const VarietyPoint& pt : enumerate_points(m, period_l)) {
                points.push_back(point_record(pt));
            }
            json doc{{"command", "picf"},
                     {"inputs", json{{"m", str(m)}, {"period", period_l}}},
                     {"outputs", json{{"points", points}}},
                     {"errata", json::array()}};
            emit(doc, timing, show_timing);
            return 0;
        }

        if (*cmd_variety) {
            Int m(m_str);
            auto closed = enumerate_points(m, period_l);
            json closed_json = json::array();
            for (const VarietyPoint& pt : closed) {
                closed_json.push_back(to_json(pt));
            }
            json outputs{{"closed_form", closed_json}};
            if (!brute_str.empty()) {
                auto brute = brute_force_points(m, period_l, Int(brute_str), threads);
                json brute_json = json::array();
                for (const VarietyPoint& pt : brute) {
                    brute_json.push_back(to_json(pt));
                }
                outputs["brute_force"] = brute_json;
                outputs["equal"] = closed == brute;
            }
            json doc{{"command", "variety"},
                     {"inputs", json{{"m", str(m)},
                                     {"l", period_l},
                                     {"brute", brute_str.empty() ? json() : json(brute_str)}}},
                     {"outputs", outputs},
                     {"errata", json::array()}};
            emit(doc, timing, show_timing);
            return 0;
        }

        if (*cmd_pell) {
            Int m(m_str);
            PellSolution f = fundamental_solution(m);
            PCF rcf = sqrt_rcf(m);
            json doc{{"command", "pell"},
                     {"inputs", json{{"m", str(m)}}},
                     {"outputs", json{{"x", str(f.x)},
                                      {"y", str(f.y)},
                                      {"norm", f.norm},
                                      {"rcf", to_json(rcf)},
                                      {"period_length", rcf.period.size()}}},
                     {"errata", json::array()}};
            emit(doc, timing, show_timing);
            return 0;
        }

        if (*cmd_family) {
            FamilyId fam = family_from_name(family_str);
            Int s(s_str), t(t_str);
            Int m = family_eval(fam, s, t);
            json errata = json::array();

            json picfs = json::array();
            for (const SignedPcf& sp : family_picf(fam, s, t)) {
                json rec{{"sign", sp.sign},
                         {"pcf", to_json(sp.pcf)},
                         {"minimal_period", sp.minimal_period},
                         {"value", to_json(pcf_value(sp.pcf))}};
                picfs.push_back(rec);
            }

            json rpcf = json();
            try {
                rpcf = to_json(family_rpcf(fam, s, t));
            } catch (const std::invalid_argument&) {
                // outside the closed-form cases: reported as null
            }

            json outputs{{"value", str(m)},
                         {"picf", picfs},
                         {"rpcf", rpcf},
                         {"closed_form_solution", closed_form_solution(fam, s, t)}};

            if (m >= 2 && !is_perfect_square(m)) {
                FundamentalityReport rep = check_convergent_fundamentality(fam, s, t);
                json expansions = json::array();
                for (const ExpansionCheck& ec : rep.expansions) {
                    expansions.push_back(json{{"pcf", to_json(ec.pcf)},
                                              {"solution", to_json(ec.solution)},
                                              {"fundamental", ec.fundamental}});
                }
                json fund{{"expected_fundamental", rep.expected_fundamental},
                          {"observed_fundamental", rep.observed_fundamental},
                          {"agrees", rep.agrees},
                          {"expansions", expansions}};
                if (rep.zeroth.has_value()) {
                    fund["zeroth_convergent"] =
                        json{{"solution", to_json(rep.zeroth->solution)},
                             {"fundamental", rep.zeroth->fundamental}};
                }
                outputs["fundamental_solution"] =
                    json{{"x", str(fundamental_solution(m).x)},
                         {"y", str(fundamental_solution(m).y)},
                         {"norm", fundamental_solution(m).norm}};
                outputs["convergent_check"] = fund;
                if (rep.erratum_candidate) {
                    errata.push_back(json{{"erratum_candidate", true},
                                          {"where", "convergent fundamentality predicate"},
                                          {"note", rep.note}});
                }
            }

            json doc{{"command", "family"},
                     {"inputs", json{{"id", family_name(fam)}, {"s", str(s)}, {"t", str(t)}}},
                     {"outputs", outputs},
                     {"errata", errata}};
            emit(doc, timing, show_timing);
            return 0;
        }

        if (*cmd_tower) {
            TowerVerification ver =
                verify_period_expansion(level_n, static_cast<mpfr_prec_t>(precision), iters);
            json embeddings = json::array();
            for (const EmbeddingVerdict& ev : ver.embeddings) {
                embeddings.push_back(json{{"k", ev.k},
                                          {"eta_dominant", ev.eta_dominant},
                                          {"target_sign", ev.target_sign},
                                          {"target", ev.target},
                                          {"residual", ev.residual},
                                          {"precision_bits", precision},
                                          {"ok", ev.ok}});
            }
            json doc{{"command", "tower"},
                     {"inputs", json{{"n", level_n},
                                     {"precision_bits", precision},
                                     {"iters", iters}}},
                     {"outputs",
                      json{{"triple", json{{"x1", to_json(ver.triple.x1)},
                                           {"x2", to_json(ver.triple.x2)},
                                           {"x3", to_json(ver.triple.x3)}}},
                           {"fixed_point_exact", ver.fixed_point_ok},
                           {"eta_relative_norm_is_minus_one", ver.norm_eta_ok},
                           {"convergent_identity_exact", ver.convergent_identity_ok},
                           {"embeddings", embeddings},
                           {"all_ok", ver.all_ok}}},
                     {"errata", json::array()}};
            emit(doc, timing, show_timing);
            if (!ver.fixed_point_ok || !ver.norm_eta_ok || !ver.convergent_identity_ok) {
                return 2;  // an exact identity that must hold did not
            }
            return 0;  // numeric verdicts are reported in the document
        }
    } catch (const std::invalid_argument& e) {
        return exit_invalid(e);
    } catch (const std::domain_error& e) {
        return exit_invalid(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
