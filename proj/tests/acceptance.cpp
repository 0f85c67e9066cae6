// Acceptance gate: every criterion is checked at exact equality and must
// finish inside its runtime budget. Prints one PASS/FAIL line per
// criterion; exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "weyl/weyl.hpp"

namespace {

using namespace weyl;
using Problems = std::vector<std::string>;

std::string g_cli;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    const std::string cmd = "\"" + g_cli + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[512];
    while (size_t n = fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, n);
    const int status = pclose(pipe);
    if (WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    return r;
}

std::vector<FamilyParams> seeded_params(unsigned long base, int count) {
    std::vector<FamilyParams> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k)
        out.push_back(random_family_params(base + static_cast<unsigned>(k)));
    return out;
}

Problems family_correctness(const std::vector<FamilyParams>& params) {
    Problems p;
    for (size_t k = 0; k < params.size(); ++k) {
        const GenImages g = build_family(params[k]);
        if (commutator(g.fy, g.fx) != WeylElement::one())
            p.push_back("params #" + std::to_string(k) + ": [fy,fx] != 1");
        if (!is_alpha_equivariant(g))
            p.push_back("params #" + std::to_string(k) +
                        ": alpha-equivariance fails");
    }
    return p;
}

Problems classification_roundtrip(const std::vector<FamilyParams>& params) {
    Problems p;
    for (size_t k = 0; k < params.size(); ++k) {
        const GenImages g = build_family(params[k]);
        const CanonicalForm cf = classify(g);
        if (cf.params() != params[k])
            p.push_back("params #" + std::to_string(k) +
                        ": classify(build_family(p)) != p");
        if (build_family(cf.params()) != g)
            p.push_back("params #" + std::to_string(k) +
                        ": build_family(classify(g)) != g");
    }
    return p;
}

Problems inverse_law() {
    Problems p;
    for (int k = 0; k < 100; ++k) {
        const FamilyParams fp = random_family_params(2000ul + k);
        if (!composes_to_identity(build_family(fp), family_inverse(fp)))
            p.push_back("params #" + std::to_string(k) +
                        ": compositions do not fix the generators");
    }
    return p;
}

Problems oracle_equivalence() {
    Problems p;
    std::mt19937_64 rng(3000);
    for (int k = 0; k < 500; ++k) {
        const WeylElement a = random_element<WeylMul>(rng, 4, 3);
        const WeylElement b = random_element<WeylMul>(rng, 4, 3);
        if (a * b != rewrite_oracle_mul(a, b))
            p.push_back("pair #" + std::to_string(k) + ": (" + render(a) +
                        ") * (" + render(b) + ")");
    }
    return p;
}

Problems involution_algebra() {
    Problems p;
    std::mt19937_64 rng(4000);
    for (int k = 0; k < 100; ++k) {
        const WeylElement w1 = random_element<WeylMul>(rng, 5, 4);
        const WeylElement w2 = random_element<WeylMul>(rng, 5, 4);
        const std::string tag = "element #" + std::to_string(k) + ": ";
        if (apply_alpha(apply_alpha(w1)) != w1)
            p.push_back(tag + "alpha^2 != id");
        if (apply_beta(apply_beta(w1)) != w1)
            p.push_back(tag + "beta^2 != id");
        if (apply_alpha(w1 * w2) != apply_alpha(w2) * apply_alpha(w1))
            p.push_back(tag + "alpha does not reverse products");
        if (apply_beta(w1 * w2) != apply_beta(w2) * apply_beta(w1))
            p.push_back(tag + "beta does not reverse products");
        if (apply_beta(w1) != apply_phi_inv(apply_alpha(apply_phi(w1))))
            p.push_back(tag + "beta != phi^-1 o alpha o phi");
    }
    return p;
}

Problems symmetric_pair_law() {
    Problems p;
    const Direction d10(1, 0);
    for (int k = 0; k < 100; ++k) {
        const GenImages g = build_family(random_family_params(5000ul + k));
        const SymPair s = decompose(g);
        const std::string tag = "input #" + std::to_string(k) + ": ";
        if (commutator(s.p0, s.p1) != WeylElement(make_scalar(1, 2)))
            p.push_back(tag + "[p0,p1] != 1/2");
        const auto [lambda, alphas] = classify_sym_pair(s);
        if (s.p1 != lambda * WeylElement::y())
            p.push_back(tag + "p1 != lambda*y");
        if (degree(d10, s.p1) != 0)
            p.push_back(tag + "leading (1,0) x-exponent of p1 is not 0");
        (void)alphas;
    }
    return p;
}

Problems jacobian_analogue() {
    Problems p;
    for (int k = 0; k < 200; ++k) {
        const JacFamilyParams fp = random_family_params(6000ul + k);
        const auto [fX, fY] = jc2_build_family(fp);
        const std::string tag = "params #" + std::to_string(k) + ": ";
        if (jac_bracket(fX, fY) != PolyElement::one())
            p.push_back(tag + "Jac(fX,fY) != 1");
        if (jc2_classify(fX, fY) != fp)
            p.push_back(tag + "classification roundtrip fails");
    }
    const Direction d01(0, 1);
    std::mt19937_64 rng(6500);
    for (int k = 0; k < 200; ++k) {
        const PolyElement a = random_nonzero_element<PolyMul>(rng, 5, 4);
        const PolyElement b = random_nonzero_element<PolyMul>(rng, 5, 4);
        const PolyElement br = jac_bracket(a, b);
        if (!br.is_zero() &&
            lower_degree(d01, br) <
                lower_degree(d01, a) + lower_degree(d01, b) - 1)
            p.push_back("bracket pair #" + std::to_string(k) +
                        ": (0,1) lower-order bound fails");
    }
    return p;
}

Problems negative_cases() {
    Problems p;
    for (int k = 0; k < 100; ++k) {
        std::mt19937_64 rng(7000ul + k);
        const FamilyParams fp = random_family_params(rng);
        const Scalar eps = random_nonzero_scalar(rng);
        GenImages g = build_family(fp);
        g.fx += eps * WeylElement::monomial(2, 0);
        try {
            classify(g);
            p.push_back("perturbation #" + std::to_string(k) +
                        ": accepted a non-endomorphism");
        } catch (const DomainError& e) {
            if (e.case_name() != "NotAlphaEquivariant" &&
                e.case_name() != "NotEndomorphism")
                p.push_back("perturbation #" + std::to_string(k) +
                            ": unexpected case " + e.case_name());
        }
    }
    try {
        classify({parse_weyl("x + 1"), parse_weyl("y")});
        p.push_back("(x+1, y): accepted");
    } catch (const DomainError& e) {
        if (e.case_name() != "NotAlphaEquivariant")
            p.push_back("(x+1, y): unexpected case " + e.case_name());
    }
    return p;
}

Problems degree1_probe() {
    Problems p;
    std::vector<Scalar> grid;
    for (int n = -4; n <= 4; ++n)
        grid.push_back(make_scalar(n, 2));
    const ProbeReport r = exhaustive_degree1_probe(grid);
    if (r.total != 729)
        p.push_back("total = " + std::to_string(r.total) + ", expected 729");
    if (r.accepted != 18)
        p.push_back("accepted = " + std::to_string(r.accepted) +
                    ", expected 18");
    if (r.mismatches != 0)
        p.push_back("mismatches = " + std::to_string(r.mismatches));
    for (const std::string& msg : r.problems)
        p.push_back(msg);
    return p;
}

Problems cli_golden() {
    Problems p;
    const CliResult comm = run_cli("commutator y x");
    if (comm.exit_code != 0 || comm.out != "1\n")
        p.push_back("commutator y x: exit " + std::to_string(comm.exit_code) +
                    ", output \"" + comm.out + "\"");
    const CliResult cls = run_cli("classify --fx '-x' --fy '-y' --json");
    const std::string golden =
        "{\"lambda\":\"1/2\",\"a\":\"-1\",\"b\":\"0\",\"c\":[]}\n";
    if (cls.exit_code != 0 || cls.out != golden)
        p.push_back("classify --json: exit " + std::to_string(cls.exit_code) +
                    ", output \"" + cls.out + "\"");
    std::mt19937_64 rng(8000);
    for (int k = 0; k < 100; ++k) {
        const WeylElement w = random_element<WeylMul>(rng);
        if (parse_weyl(render(w)) != w)
            p.push_back("parse/render #" + std::to_string(k) + ": " +
                        render(w));
        const PolyElement q = random_element<PolyMul>(rng);
        if (parse_poly(render(q)) != q)
            p.push_back("parse/render #" + std::to_string(k) + ": " +
                        render(q));
    }
    return p;
}

bool run_criterion(int number, const char* name, double budget_s,
                   const std::function<Problems()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Problems problems;
    try {
        problems = fn();
    } catch (const std::exception& e) {
        problems.push_back(std::string("unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (problems.empty() && elapsed > budget_s)
        problems.push_back("budget exceeded");
    const bool ok = problems.empty();
    std::printf("[%s] %2d %-26s %6.2fs (budget %gs)\n", ok ? "PASS" : "FAIL",
                number, name, elapsed, budget_s);
    for (size_t i = 0; i < problems.size() && i < 5; ++i)
        std::printf("       - %s\n", problems[i].c_str());
    if (problems.size() > 5)
        std::printf("       - ... %zu more\n", problems.size() - 5);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-weyl-cli>\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];

    const std::vector<FamilyParams> params = seeded_params(1000, 200);
    bool ok = true;
    ok &= run_criterion(1, "family-correctness", 10,
                        [&] { return family_correctness(params); });
    ok &= run_criterion(2, "classification-roundtrip", 10,
                        [&] { return classification_roundtrip(params); });
    ok &= run_criterion(3, "inverse-law", 20, inverse_law);
    ok &= run_criterion(4, "oracle-equivalence", 30, oracle_equivalence);
    ok &= run_criterion(5, "involution-algebra", 5, involution_algebra);
    ok &= run_criterion(6, "symmetric-pair-law", 10, symmetric_pair_law);
    ok &= run_criterion(7, "jacobian-analogue", 10, jacobian_analogue);
    ok &= run_criterion(8, "negative-cases", 5, negative_cases);
    ok &= run_criterion(9, "degree1-probe", 5, degree1_probe);
    ok &= run_criterion(10, "cli-golden", 5, cli_golden);

    std::printf("%s\n", ok ? "acceptance: all criteria passed"
                           : "acceptance: FAILURES");
    return ok ? 0 : 1;
}
