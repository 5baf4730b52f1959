// End-to-end checks of the CLI binary: output bytes, exit codes, determinism.
// argv[1] is the path to the binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_smoke <path-to-binary>\n";
        return 2;
    }
    std::string bin = argv[1];

    RunResult cf = run(bin + " --p 2 cf --num X --den X^2+1");
    check(cf.exit_code == 0, "cf exit code");
    check(contains(cf.out, "\"exact-rational\""), "cf terminated reason");
    check(contains(cf.out, "\"X\""), "cf terms");

    RunResult cf2 = run(bin + " --p 2 cf --num 1 --den X");
    check(cf2.exit_code == 0 && contains(cf2.out, "\"X\""), "cf 1/X");

    RunResult bad = run(bin + " --p 2 cf --num 'X^2 + $'");
    check(bad.exit_code == 2, "malformed polynomial exits 2");

    RunResult dom = run(bin + " --p 2 distance --m1 '0;0;0;0' --m2 '1;0;0;1'");
    check(dom.exit_code == 3, "singular matrix exits 3");

    RunResult prec = run(bin + " --p 2 --prec 8 --samples 2000 verify haar --depth 6");
    check(prec.exit_code == 4, "precision exhaustion exits 4");

    RunResult ent = run(bin + " --p 2 verify entropy");
    check(ent.exit_code == 0 && contains(ent.out, "\"pass\": true"), "verify entropy passes");

    RunResult biased = run(bin + " --p 2 --samples 20000 verify haar --depth 4 --bias");
    check(biased.exit_code == 1, "biased haar harness exits 1");

    RunResult orbit1 = run(bin + " --p 2 --seed 9 --prec 64 orbit --steps 12");
    RunResult orbit2 = run(bin + " --p 2 --seed 9 --prec 64 orbit --steps 12");
    check(orbit1.exit_code == 0 && orbit1.out == orbit2.out, "orbit determinism");
    check(contains(orbit1.out, "step,quotient,degree,prec_remaining"), "orbit CSV header");

    RunResult orb_rat = run(bin + " --p 2 orbit --steps 8 --num X --den X^2+1");
    check(orb_rat.exit_code == 0 && contains(orb_rat.out, "precision-exhausted"),
          "rational orbit reports its terminal row");

    RunResult code_json = run(bin + " --p 3 --seed 4 code --back 3 --fwd 3");
    check(code_json.exit_code == 0 && contains(code_json.out, "\"u\""), "code JSON letters");
    RunResult code_csv = run(bin + " --p 3 --seed 4 --format csv code --back 3 --fwd 3");
    check(code_csv.exit_code == 0 && contains(code_csv.out, "n,quotient,degree,sojourn"),
          "code CSV header");

    RunResult dist = run(bin + " --p 2 distance --m1 '1;0;0;1' --m2 'X;0;0;1'");
    check(dist.exit_code == 0 && contains(dist.out, "\"distance\": 1"), "distance output");

    RunResult ext = run(bin + " --p 2 --n 2 --modulus t^2+t+1 cf --num X --den 'X^2+[t]'");
    check(ext.exit_code == 0, "extension field cf");

    RunResult rep1 = run(bin + " --p 2 --samples 5000 --seed 3 verify haar --depth 4");
    RunResult rep2 = run(bin + " --p 2 --samples 5000 --seed 3 verify haar --depth 4");
    check(rep1.exit_code == 0 && rep1.out == rep2.out, "report determinism");

    if (g_failures == 0) std::cout << "cli_smoke: all checks passed\n";
    return g_failures == 0 ? 0 : 1;
}
