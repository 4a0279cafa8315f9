#include "repst/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "repst/gram.hpp"
#include "repst/json_io.hpp"

namespace repst {

namespace {

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0" || s == "empty") return {};
    Partition p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int part = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad partition part: " + item);
        p.push_back(part);
    }
    check_partition(p);
    return p;
}

std::vector<Rational> parse_coeff_list(const std::string& s) {
    std::vector<Rational> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(rational_from_string(item));
    return coeffs;
}

// "int:k" | "rat:a/b" | "alg:<modulus coeffs>:<rep coeffs>", coefficient
// lists comma separated ascending.
InterpolationPoint parse_t_spec(const std::string& spec, std::ostream& err) {
    size_t colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed t spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "int" || kind == "rat") {
        return InterpolationPoint::from_rational(rational_from_string(rest));
    }
    if (kind == "alg") {
        size_t split = rest.find(':');
        if (split == std::string::npos)
            throw std::invalid_argument("malformed t spec, expected alg:<modulus>:<rep>");
        Poly modulus(parse_coeff_list(rest.substr(0, split)));
        Poly rep(parse_coeff_list(rest.substr(split + 1)));
        if (modulus.degree() >= 2) {
            RootFactorization f = factor_rational_roots(modulus);
            if (!f.roots.empty())
                err << "warning: modulus " << modulus.to_string()
                    << " is reducible (has rational roots); values are not a field\n";
        }
        return InterpolationPoint::from(AlgebraicNumber(modulus, rep));
    }
    throw std::invalid_argument("malformed t spec kind: " + kind);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

struct Output {
    std::ostream& out;
    bool json_mode;

    void json(const Json& j) { out << j.dump(2) << "\n"; }
    void line(const std::string& s) { out << s << "\n"; }
    // one value, two presentations
    void result(const Json& j, const std::string& human) {
        if (json_mode) json(j);
        else
            line(human);
    }
};

std::string poly_pair_human(const Poly& p, const std::string& factored) {
    return p.to_string() + "\n= " + factored;
}

std::string factored_q(const Partition& p) {
    int n = partition_sum(p);
    Rational lead = to_rat(hook_dimension(p));
    lead /= Rational(factorial(static_cast<unsigned>(n)));
    std::vector<std::pair<Rational, int>> roots;
    for (const Rational& r : q_polynomial_roots(p)) {
        if (!roots.empty() && roots.back().first == r) ++roots.back().second;
        else
            roots.emplace_back(r, 1);
    }
    return factored_string(lead, roots);
}

std::string factored_cp(const Partition& p) {
    std::vector<Rational> rs = content_polynomial_roots(p);
    std::sort(rs.begin(), rs.end());
    std::vector<std::pair<Rational, int>> roots;
    for (const Rational& r : rs) {
        if (!roots.empty() && roots.back().first == r) ++roots.back().second;
        else
            roots.emplace_back(r, 1);
    }
    return factored_string(Rational(1), roots);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in the interpolation category Rep(S_t) and the "
                 "representation theory of symmetric groups"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable JSON output");

    std::string arg_lambda, arg_mu, arg_nu, arg_rho, arg_poly, arg_t, arg_chi, arg_target;
    std::string arg_file, arg_file2, arg_object;
    int arg_n = 0, arg_p = 0, arg_q = 0;
    bool flag_matrix = false;
    double budget_minutes = 10.0;

    // every leaf stores a closure to run after parsing
    std::function<void(Output&)> action;
    auto set = [&](std::function<void(Output&)> f) { action = std::move(f); };

    auto* dim = app.add_subcommand("dim", "number of standard Young tableaux (dim V_lambda)");
    dim->add_option("lambda", arg_lambda)->required();
    dim->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            long long d = hook_dimension(p);
            o.result(Json{{"partition", partition_to_json(p)}, {"dim", d}}, std::to_string(d));
        });
    });

    auto* chr = app.add_subcommand("char", "irreducible character value chi_lambda(rho)");
    chr->add_option("lambda", arg_lambda)->required();
    chr->add_option("rho", arg_rho)->required();
    chr->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda), rho = parse_partition(arg_rho);
            long long v = character_value(p, rho);
            o.result(Json{{"partition", partition_to_json(p)},
                          {"cycle_type", partition_to_json(rho)},
                          {"value", v}},
                     std::to_string(v));
        });
    });

    auto* cp = app.add_subcommand("cp", "content polynomial of a partition");
    cp->add_option("lambda", arg_lambda)->required();
    cp->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            Poly poly = content_polynomial(p);
            std::string factored = factored_cp(p);
            o.result(Json{{"partition", partition_to_json(p)},
                          {"poly", poly_to_json(poly)},
                          {"expanded", poly.to_string()},
                          {"factored", factored}},
                     poly_pair_human(poly, factored));
        });
    });

    auto* qp = app.add_subcommand("qpoly", "dimension polynomial of the simple labelled lambda");
    qp->add_option("lambda", arg_lambda)->required();
    qp->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            Poly poly = q_polynomial(p);
            std::string factored = factored_q(p);
            o.result(Json{{"partition", partition_to_json(p)},
                          {"poly", poly_to_json(poly)},
                          {"expanded", poly.to_string()},
                          {"factored", factored}},
                     poly_pair_human(poly, factored));
        });
    });

    auto* ivp = app.add_subcommand("ivp", "integer-valued polynomial test");
    ivp->add_option("poly", arg_poly, "comma-separated coefficients, ascending")->required();
    ivp->callback([&] {
        set([&](Output& o) {
            Poly poly(parse_coeff_list(arg_poly));
            bool ok = is_integer_valued(poly);
            o.result(Json{{"poly", poly_to_json(poly)}, {"integer_valued", ok}},
                     ok ? "true" : "false");
        });
    });

    auto* cs = app.add_subcommand("chi-schur", "Euler characteristic of the Schur image, two ways");
    cs->add_option("lambda", arg_lambda)->required();
    cs->add_option("--chi", arg_chi, "evaluate at a t-spec instead of the symbolic T");
    cs->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            if (arg_chi.empty()) {
                auto [a, b] = chi_schur_both_ways(p, Poly::variable());
                o.result(Json{{"partition", partition_to_json(p)},
                              {"cycle_sum", poly_to_json(a)},
                              {"content_form", poly_to_json(b)},
                              {"agree", a == b}},
                         "cycle-sum:    " + a.to_string() + "\ncontent-form: " + b.to_string() +
                             "\nagree: " + (a == b ? std::string("true") : std::string("false")));
            } else {
                InterpolationPoint t = parse_t_spec(arg_chi, err);
                auto [a, b] = chi_schur_both_ways(p, t.value);
                o.result(Json{{"partition", partition_to_json(p)},
                              {"cycle_sum", algebraic_to_json(a)},
                              {"content_form", algebraic_to_json(b)},
                              {"agree", a == b}},
                         "cycle-sum:    " + a.to_string() + "\ncontent-form: " + b.to_string() +
                             "\nagree: " + (a == b ? std::string("true") : std::string("false")));
            }
        });
    });

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("lambda", arg_lambda)->required();
        sub->add_option("mu", arg_mu)->required();
        sub->add_option("nu", arg_nu)->required();
    };
    auto triple_action = [&](Output& o, long long v, const char* kind) {
        o.result(Json{{"lambda", partition_to_json(parse_partition(arg_lambda))},
                      {"mu", partition_to_json(parse_partition(arg_mu))},
                      {"nu", partition_to_json(parse_partition(arg_nu))},
                      {"kind", kind},
                      {"value", v}},
                 std::to_string(v));
    };

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient by tableau enumeration");
    add_triple(lr);
    lr->callback([&] {
        set([&](Output& o) {
            long long v = lr_coefficient(parse_partition(arg_lambda), parse_partition(arg_mu),
                                         parse_partition(arg_nu));
            triple_action(o, v, "littlewood-richardson");
        });
    });

    auto* ind = app.add_subcommand("induct", "induction multiplicity via Frobenius reciprocity");
    add_triple(ind);
    ind->callback([&] {
        set([&](Output& o) {
            long long v = induction_multiplicity(parse_partition(arg_lambda), parse_partition(arg_mu),
                                                 parse_partition(arg_nu));
            triple_action(o, v, "induction");
        });
    });

    auto* sk = app.add_subcommand("stable-kron", "stable tensor multiplicity at generic parameter");
    add_triple(sk);
    sk->callback([&] {
        set([&](Output& o) {
            long long v = stable_tensor_multiplicity(parse_partition(arg_lambda),
                                                     parse_partition(arg_mu), parse_partition(arg_nu));
            triple_action(o, v, "stable-kronecker");
        });
    });

    auto* gp = app.add_subcommand("gen-power", "decomposition of the n-th power of the generator");
    gp->add_option("n", arg_n)->required();
    gp->callback([&] {
        set([&](Output& o) {
            GeneratorPowerReport r = generator_power_report(arg_n);
            if (o.json_mode) {
                o.json(generator_power_report_to_json(r));
                return;
            }
            std::string text;
            for (const auto& [p, mult] : r.multiplicities) {
                text += Json(partition_to_json(p)).dump() + ": " + std::to_string(mult) + "\n";
            }
            text += "length " + std::to_string(r.length) + ", dim End " + std::to_string(r.dim_end) +
                    " = Bell(" + std::to_string(2 * r.n) + ")";
            o.line(text);
        });
    });

    auto* palg = app.add_subcommand("palg", "partition algebra operations");
    palg->require_subcommand(1);

    auto* pc = palg->add_subcommand("compose", "compose two morphisms (second applied first)");
    pc->add_option("g", arg_file)->required();
    pc->add_option("f", arg_file2)->required();
    pc->callback([&] {
        set([&](Output& o) {
            DiagramMorphism g = morphism_from_json(load_json_file(arg_file));
            DiagramMorphism f = morphism_from_json(load_json_file(arg_file2));
            DiagramMorphism h = (g.basis() == Basis::kOrbit) ? compose_orbit(g, f) : compose(g, f);
            o.json(morphism_to_json(h));
        });
    });

    auto* pt = palg->add_subcommand("trace", "categorical trace of an endomorphism");
    pt->add_option("f", arg_file)->required();
    pt->callback([&] {
        set([&](Output& o) {
            Poly t = trace(morphism_from_json(load_json_file(arg_file)));
            o.result(Json{{"trace", poly_to_json(t)}, {"expanded", t.to_string()}}, t.to_string());
        });
    });

    auto* po = palg->add_subcommand("to-orbit", "convert a morphism to the orbit basis");
    po->add_option("f", arg_file)->required();
    po->callback([&] {
        set([&](Output& o) { o.json(morphism_to_json(to_orbit_basis(morphism_from_json(load_json_file(arg_file))))); });
    });

    auto* pg = palg->add_subcommand("gram", "Gram matrix and determinant of the trace form");
    pg->add_option("n", arg_n)->required();
    pg->add_flag("--matrix", flag_matrix, "include the full matrix");
    pg->add_option("--budget-minutes", budget_minutes, "wall-time budget for n = 3");
    pg->callback([&] {
        set([&](Output& o) {
            GramOptions options;
            options.budget_minutes = budget_minutes;
            Poly det = gram_det(arg_n, options);
            Json j{{"n", arg_n}, {"dim", end_dimension(arg_n)}};
            if (flag_matrix) {
                Json rows = Json::array();
                for (const auto& row : gram_matrix(arg_n)) {
                    Json r = Json::array();
                    for (const Poly& e : row) r.push_back(e.to_string());
                    rows.push_back(r);
                }
                j["matrix"] = rows;
            }
            j["det"] = poly_to_json(det);
            j["det_expanded"] = det.to_string();
            Json roots = Json::array();
            bool all_natural = true;
            if (arg_n <= 2) {
                RootFactorization f = factor_rational_roots(det);
                for (const auto& [r, mult] : f.roots) {
                    if (is_integer(r)) {
                        roots.push_back(Json{{"root", r.get_str()}, {"mult", mult}});
                        if (r < 0) all_natural = false;
                    }
                }
                j["integer_roots"] = roots;
                j["root_search"] = "rational root theorem";
            } else {
                for (const auto& [r, mult] : integer_roots_in_window(det, 50)) {
                    roots.push_back(Json{{"root", r}, {"mult", mult}});
                    if (r < 0) all_natural = false;
                }
                j["integer_roots"] = roots;
                j["root_search"] = "window scan [-50, deg + 50]";
            }
            j["all_integer_roots_natural"] = all_natural;
            o.json(j);
        });
    });

    auto* pe = palg->add_subcommand("end-dim", "dimension of the endomorphism space of n strands");
    pe->add_option("n", arg_n)->required();
    pe->callback([&] {
        set([&](Output& o) {
            long long d = end_dimension(arg_n);
            o.result(Json{{"n", arg_n}, {"dim", d}}, std::to_string(d));
        });
    });

    auto* si = app.add_subcommand("schur-idem", "isotypic idempotent on permutation diagrams");
    si->add_option("lambda", arg_lambda)->required();
    si->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            DiagramMorphism d = schur_idempotent(p);
            Poly t = trace(d);
            o.json(Json{{"partition", partition_to_json(p)},
                        {"nonzero", !d.is_zero()},
                        {"trace", t.to_string()},
                        {"morphism", morphism_to_json(d)}});
        });
    });

    auto* eu = app.add_subcommand("euler", "Euler characteristic of a simple at a parameter");
    eu->add_option("lambda", arg_lambda)->required();
    eu->add_option("--t", arg_t, "int:k | rat:a/b | alg:<modulus>:<rep>")->required();
    eu->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            InterpolationPoint t = parse_t_spec(arg_t, err);
            AlgebraicNumber chi = euler_char_simple(p, t);
            o.result(Json{{"partition", partition_to_json(p)},
                          {"t", algebraic_to_json(t.value)},
                          {"chi", algebraic_to_json(chi)},
                          {"chi_str", chi.to_string()},
                          {"rational_integer", chi.is_rational_integer()}},
                     chi.is_rational() ? chi.as_rational().get_str() : chi.to_string());
        });
    });

    auto* td = app.add_subcommand("tensor-decomp", "generic tensor product of two simples");
    td->add_option("lambda", arg_lambda)->required();
    td->add_option("mu", arg_mu)->required();
    td->add_option("--t", arg_t, "optional; natural parameters are refused");
    td->callback([&] {
        set([&](Output& o) {
            if (!arg_t.empty()) {
                InterpolationPoint t = parse_t_spec(arg_t, err);
                if (t.is_natural)
                    throw std::runtime_error(
                        "tensor-decomp: t is a natural number; the generic decomposition "
                        "does not apply");
            }
            VirtualObject x{{parse_partition(arg_lambda), 1}};
            VirtualObject y{{parse_partition(arg_mu), 1}};
            VirtualObject prod = tensor_decompose(x, y);
            if (o.json_mode) {
                o.json(virtual_object_to_json(prod));
                return;
            }
            std::string text;
            for (const auto& [p, mult] : prod)
                text += Json(partition_to_json(p)).dump() + ": " + std::to_string(mult) + "\n";
            if (!text.empty()) text.pop_back();
            o.line(text);
        });
    });

    auto* ig = app.add_subcommand("integrality", "integral-type test of a virtual object");
    ig->add_option("--object", arg_object, "virtual object JSON file")->required();
    ig->add_option("--t", arg_t)->required();
    ig->callback([&] {
        set([&](Output& o) {
            VirtualObject x = virtual_object_from_json(load_json_file(arg_object));
            InterpolationPoint t = parse_t_spec(arg_t, err);
            IntegralityResult r = is_integral_type(x, t);
            Json j{{"integral", r.integral}};
            if (r.witness) {
                j["witness"] = partition_to_json(*r.witness);
                j["witness_chi"] = algebraic_to_json(*r.witness_chi);
                j["witness_chi_str"] = r.witness_chi->to_string();
            }
            o.result(j, r.integral ? "integral"
                                   : "not integral, witness " + Json(partition_to_json(*r.witness)).dump() +
                                         " with chi = " + r.witness_chi->to_string());
        });
    });

    auto* ss = app.add_subcommand("super-schur", "super Schur dimension on a (p|q) space");
    ss->add_option("lambda", arg_lambda)->required();
    ss->add_option("p", arg_p)->required();
    ss->add_option("q", arg_q)->required();
    ss->callback([&] {
        set([&](Output& o) {
            Partition p = parse_partition(arg_lambda);
            SuperDim d{arg_p, arg_q};
            long long dim = super_schur_dim(p, d);
            bool rect = schur_vanishes_super(p, d);
            o.result(Json{{"partition", partition_to_json(p)},
                          {"p", arg_p},
                          {"q", arg_q},
                          {"dim", dim},
                          {"vanishes", dim == 0},
                          {"rectangle_criterion", rect}},
                     std::to_string(dim));
        });
    });

    auto* ec = app.add_subcommand("etale-check", "supertrace form nondegeneracy of a superalgebra");
    ec->add_option("file", arg_file)->required();
    ec->callback([&] {
        set([&](Output& o) {
            SuperAlgebra a = superalgebra_from_json(load_json_file(arg_file));
            Rational det = matrix_det(supertrace_form(a));
            o.result(Json{{"p", a.even_dim()},
                          {"q", a.odd_dim()},
                          {"etale", det != 0},
                          {"det", det.get_str()},
                          {"chi", a.even_dim() - a.odd_dim()},
                          {"odd_squares_traceless", odd_squares_traceless(a)}},
                     det != 0 ? "etale" : "not etale");
        });
    });

    auto* s7 = app.add_subcommand("section7", "one-shot reproduction of the counterexample chain");
    s7->callback([&] {
        set([&](Output& o) {
            Section7Report r = reproduce_section7();
            if (o.json_mode) {
                o.json(section7_report_to_json(r));
                return;
            }
            std::string text;
            for (const ReportStep& s : r.steps) text += s.name + ": " + s.value + "\n";
            text += "verdict: " + r.verdict;
            o.line(text);
        });
    });

    auto* sc = app.add_subcommand("search-cx", "search for a non-integral tensor square");
    sc->add_option("lambda", arg_lambda)->required();
    sc->add_option("--target", arg_target, "rational Euler characteristic to match")->required();
    sc->callback([&] {
        set([&](Output& o) {
            CounterexampleSearch r =
                search_counterexample(parse_partition(arg_lambda), rational_from_string(arg_target));
            Json j;
            switch (r.status) {
                case CounterexampleSearch::Status::kFound: j["status"] = "found"; break;
                case CounterexampleSearch::Status::kNoneFound: j["status"] = "none-found"; break;
                case CounterexampleSearch::Status::kUndecided: j["status"] = "undecided"; break;
            }
            j["note"] = r.note;
            if (r.modulus) {
                j["modulus"] = poly_to_json(*r.modulus);
                j["modulus_expanded"] = r.modulus->to_string();
            }
            if (!r.failures.empty()) {
                Json fails = Json::array();
                for (const auto& [p, chi] : r.failures)
                    fails.push_back(Json{{"partition", partition_to_json(p)},
                                         {"chi", algebraic_to_json(chi)},
                                         {"chi_str", chi.to_string()}});
                j["failures"] = fails;
                j["witness"] = partition_to_json(r.failures.front().first);
            }
            o.json(j);
        });
    });

    // let a trailing --json reach the top-level flag
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.name("repst");
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Output o{out, json_mode};
    try {
        if (action) action(o);
    } catch (const std::invalid_argument& e) {
        o.json(Json{{"error", e.what()}});
        return 2;
    } catch (const std::runtime_error& e) {
        o.json(Json{{"error", e.what()}});
        return 1;
    }
    return 0;
}

}  // namespace repst
