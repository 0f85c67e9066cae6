#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "weyl/weyl.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace weyl;

Scalar flag_scalar(const std::string& text, const std::string& flag) {
    auto s = scalar_from_string(text);
    if (!s)
        throw DomainError("InvalidParams", flag + " expects a rational p or p/q, got '" + text + "'");
    return *s;
}

std::vector<Scalar> flag_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(flag_scalar(text.substr(start, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - start),
                                  "--c"));
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

json scalars_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const Scalar& s : v)
        arr.push_back(scalar_to_string(s));
    return arr;
}

std::string scalars_text(const std::vector<Scalar>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += scalar_to_string(v[i]);
    }
    return out + "]";
}

void print_weyl_images(const GenImages& g) {
    std::cout << render(g.fx) << "\n" << render(g.fy) << "\n";
}

void print_poly_images(const std::pair<PolyElement, PolyElement>& g) {
    std::cout << render(g.first) << "\n" << render(g.second) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic in the first Weyl algebra A_1(Q): "
                 "normal forms, involutions, the alpha-endomorphism "
                 "classifier and its commutative Jacobian analogue."};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string expr1, expr2, fx_text, fy_text;
    std::string a_text, b_text, c_text;
    int rho = 0, sigma = 0;
    bool lower = false, as_json = false;
    unsigned long trials = 25, seed = 1;

    auto* normalize = app.add_subcommand(
        "normalize", "Parse an expression and print its normal form");
    normalize->add_option("EXPR", expr1)->required();
    normalize->callback(
        [&] { std::cout << render(parse_weyl(expr1)) << "\n"; });

    auto* comm = app.add_subcommand(
        "commutator", "Print P*Q - Q*P for the two arguments P Q");
    comm->add_option("P", expr1)->required();
    comm->add_option("Q", expr2)->required();
    comm->callback([&] {
        std::cout << render(commutator(parse_weyl(expr1), parse_weyl(expr2)))
                  << "\n";
    });

    const auto add_unary = [&](const char* name, const char* help,
                               WeylElement (*op)(const WeylElement&)) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("EXPR", expr1)->required();
        cmd->callback(
            [&, op] { std::cout << render(op(parse_weyl(expr1))) << "\n"; });
    };
    add_unary("alpha", "Apply the exchange involution alpha", &apply_alpha);
    add_unary("beta", "Apply the involution beta", &apply_beta);
    add_unary("phi", "Apply the automorphism phi", &apply_phi);
    add_unary("phi-inv", "Apply the inverse automorphism phi^-1",
              &apply_phi_inv);

    auto* deg = app.add_subcommand(
        "degree", "(rho,sigma)-degree of an expression (max weight)");
    deg->add_option("--rho", rho)->required();
    deg->add_option("--sigma", sigma)->required();
    deg->add_flag("--lower", lower, "use the minimal weight instead");
    deg->add_option("EXPR", expr1)->required();
    deg->callback([&] {
        const Direction d(rho, sigma);
        const WeylElement w = parse_weyl(expr1);
        std::cout << (lower ? lower_degree(d, w) : degree(d, w)) << "\n";
    });

    auto* lead = app.add_subcommand(
        "leading", "(rho,sigma)-leading term of an expression");
    lead->add_option("--rho", rho)->required();
    lead->add_option("--sigma", sigma)->required();
    lead->add_flag("--lower", lower, "use the minimal-weight face instead");
    lead->add_option("EXPR", expr1)->required();
    lead->callback([&] {
        const Direction d(rho, sigma);
        const WeylElement w = parse_weyl(expr1);
        std::cout << render(lower ? lower_leading_term(d, w)
                                  : leading_term(d, w))
                  << "\n";
    });

    auto* supp = app.add_subcommand(
        "support", "Exponent pairs with nonzero coefficient");
    supp->add_option("EXPR", expr1)->required();
    supp->callback([&] {
        std::string out = "{";
        bool first = true;
        for (const LatticePoint& p : support(parse_weyl(expr1))) {
            if (!first)
                out += ",";
            out += "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
            first = false;
        }
        std::cout << out << "}\n";
    });

    auto* apply = app.add_subcommand(
        "apply", "Apply the endomorphism x -> fx, y -> fy to EXPR");
    apply->add_option("--fx", fx_text)->required();
    apply->add_option("--fy", fy_text)->required();
    apply->add_option("EXPR", expr1)->required();
    apply->callback([&] {
        const GenImages g{parse_weyl(fx_text), parse_weyl(fy_text)};
        std::cout << render(apply_endo(g, parse_weyl(expr1))) << "\n";
    });

    auto* check = app.add_subcommand(
        "check", "Report the endomorphism and alpha-equivariance checks");
    check->add_option("--fx", fx_text)->required();
    check->add_option("--fy", fy_text)->required();
    check->callback([&] {
        const GenImages g{parse_weyl(fx_text), parse_weyl(fy_text)};
        const Diagnosis d = diagnose(g);
        if (d.endo_residual.is_zero())
            std::cout << "endomorphism: yes\n";
        else
            std::cout << "endomorphism: no (residual [fy,fx] - 1 = "
                      << render(d.endo_residual) << ")\n";
        if (d.equivariance_residual.is_zero())
            std::cout << "alpha-equivariant: yes\n";
        else
            std::cout << "alpha-equivariant: no (residual ("
                      << render(apply_alpha(g.fx)) << ") - (" << render(g.fy)
                      << ") = " << render(d.equivariance_residual) << ")\n";
    });

    auto* classify_cmd = app.add_subcommand(
        "classify", "Extract the canonical parameters of an "
                    "alpha-endomorphism");
    classify_cmd->add_option("--fx", fx_text)->required();
    classify_cmd->add_option("--fy", fy_text)->required();
    classify_cmd->add_flag("--json", as_json);
    classify_cmd->callback([&] {
        const CanonicalForm cf =
            classify({parse_weyl(fx_text), parse_weyl(fy_text)});
        if (as_json) {
            json j;
            j["lambda"] = scalar_to_string(cf.lambda());
            j["a"] = scalar_to_string(cf.a());
            j["b"] = scalar_to_string(cf.b());
            j["c"] = scalars_json(cf.c());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "lambda = " << scalar_to_string(cf.lambda()) << "\n"
                      << "a = " << scalar_to_string(cf.a()) << "\n"
                      << "b = " << scalar_to_string(cf.b()) << "\n"
                      << "c = " << scalars_text(cf.c()) << "\n";
        }
    });

    auto* invert_cmd = app.add_subcommand(
        "invert", "Print the inverse images f^-1(x), f^-1(y)");
    invert_cmd->add_option("--fx", fx_text)->required();
    invert_cmd->add_option("--fy", fy_text)->required();
    invert_cmd->callback([&] {
        print_weyl_images(invert({parse_weyl(fx_text), parse_weyl(fy_text)}));
    });

    auto* family = app.add_subcommand(
        "family", "Print the images of the automorphism with parameters "
                  "a, b, c0,c1,...");
    family->add_option("--a", a_text)->required();
    family->add_option("--b", b_text)->required();
    family->add_option("--c", c_text);
    family->callback([&] {
        print_weyl_images(build_family(FamilyParams(
            flag_scalar(a_text, "--a"), flag_scalar(b_text, "--b"),
            flag_scalar_list(c_text))));
    });

    auto* jac = app.add_subcommand(
        "jac", "Commutative analogue on K[X,Y] with the Jacobian bracket");
    jac->require_subcommand(1);

    auto* jbracket = jac->add_subcommand(
        "bracket", "Jacobian bracket of two polynomials");
    jbracket->add_option("P", expr1)->required();
    jbracket->add_option("Q", expr2)->required();
    jbracket->callback([&] {
        std::cout << render(jac_bracket(parse_poly(expr1), parse_poly(expr2)))
                  << "\n";
    });

    auto* jcheck = jac->add_subcommand(
        "check", "Report the alpha-morphism and unit-Jacobian checks");
    jcheck->add_option("--fx", fx_text)->required();
    jcheck->add_option("--fy", fy_text)->required();
    jcheck->callback([&] {
        const PolyElement fX = parse_poly(fx_text);
        const PolyElement fY = parse_poly(fy_text);
        const PolyElement res = apply_poly_alpha(fX) - fY;
        if (res.is_zero())
            std::cout << "alpha-morphism: yes\n";
        else
            std::cout << "alpha-morphism: no (residual alpha(fX) - fY = "
                      << render(res) << ")\n";
        const PolyElement j = jac_bracket(fX, fY);
        if (j == PolyElement::one())
            std::cout << "jacobian-one: yes\n";
        else
            std::cout << "jacobian-one: no (Jac(fX,fY) = " << render(j)
                      << ")\n";
    });

    auto* jclassify = jac->add_subcommand(
        "classify", "Extract the canonical parameters of an alpha-morphism "
                    "with Jacobian 1");
    jclassify->add_option("--fx", fx_text)->required();
    jclassify->add_option("--fy", fy_text)->required();
    jclassify->add_flag("--json", as_json);
    jclassify->callback([&] {
        const JacFamilyParams p =
            jc2_classify(parse_poly(fx_text), parse_poly(fy_text));
        if (as_json) {
            json j;
            j["a"] = scalar_to_string(p.a());
            j["b"] = scalar_to_string(p.b());
            j["c"] = scalars_json(p.c());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "a = " << scalar_to_string(p.a()) << "\n"
                      << "b = " << scalar_to_string(p.b()) << "\n"
                      << "c = " << scalars_text(p.c()) << "\n";
        }
    });

    auto* jinvert = jac->add_subcommand(
        "invert", "Print the inverse images f^-1(X), f^-1(Y)");
    jinvert->add_option("--fx", fx_text)->required();
    jinvert->add_option("--fy", fy_text)->required();
    jinvert->callback([&] {
        print_poly_images(
            jc2_invert(parse_poly(fx_text), parse_poly(fy_text)));
    });

    auto* jfamily = jac->add_subcommand(
        "family", "Print the images of the map with parameters a, b, "
                  "c0,c1,...");
    jfamily->add_option("--a", a_text)->required();
    jfamily->add_option("--b", b_text)->required();
    jfamily->add_option("--c", c_text);
    jfamily->callback([&] {
        print_poly_images(jc2_build_family(JacFamilyParams(
            flag_scalar(a_text, "--a"), flag_scalar(b_text, "--b"),
            flag_scalar_list(c_text))));
    });

    auto* verify = app.add_subcommand(
        "verify", "Run the randomized property campaigns");
    verify->add_option("--trials", trials, "trials per campaign");
    verify->add_option("--seed", seed, "base seed");
    verify->add_flag("--json", as_json);
    verify->callback([&] {
        const VerifyReport report = run_verify(trials, seed);
        if (as_json) {
            json j;
            j["trials"] = report.trials;
            j["failures"] = json::array();
            for (const VerifyFailure& f : report.failures)
                j["failures"].push_back({{"campaign", f.campaign},
                                         {"trial", f.trial},
                                         {"detail", f.detail}});
            j["seed"] = report.seed;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "seed: " << report.seed << "\n"
                      << "trials per campaign: " << report.trials << "\n"
                      << "campaigns: " << detail::all_campaigns().size()
                      << "\n";
            for (const VerifyFailure& f : report.failures)
                std::cout << "FAIL " << f.campaign << " trial " << f.trial
                          << ": " << f.detail << "\n";
            std::cout << "failures: " << report.failures.size() << "\n";
        }
        if (!report.failures.empty())
            exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const weyl::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const weyl::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
