/* Release gate: one line per criterion, PASS or FAIL, exit 0 only if all
 * pass. Each criterion also carries a wall-clock budget; blowing the budget
 * fails it even when the math checks out. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "loopdec/free_lie.hpp"
#include "loopdec/hilton_milnor.hpp"
#include "loopdec/moment_angle.hpp"
#include "loopdec/qsymm.hpp"
#include "loopdec/subhopf.hpp"

using namespace loopdec;

namespace {

int criteria_failed = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > budget_seconds) {
        ok = false;
        detail = "exceeded the " + std::to_string(budget_seconds) + " s budget";
    }
    if (!ok)
        ++criteria_failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%6.2f s", elapsed);
    std::cout << "criterion " << (number < 10 ? " " : "") << number << ": "
              << (ok ? "PASS" : "FAIL") << " (" << timing << ")  " << label;
    if (!ok && !detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n";
}

TensorContext even_context(int dimv, long long p, int maxlen)
{
    std::vector<Generator> gens;
    for (int i = 0; i < dimv; ++i)
        gens.push_back({std::string(1, static_cast<char>('a' + i)), 2});
    return TensorContext(gens, PrimeField(p), maxlen, 2 * maxlen);
}

/* The four standing wedges, rebuilt at whatever depth a check needs. */
std::vector<std::vector<SpaceDescriptor>> fixture_wedges(int cutoff)
{
    return {
        {SpaceDescriptor::sphere(2, cutoff), SpaceDescriptor::sphere(2, cutoff)},
        {SpaceDescriptor::sphere(3, cutoff), SpaceDescriptor::sphere(5, cutoff)},
        {SpaceDescriptor::sphere(3, cutoff), SpaceDescriptor::suspended_cp_infinity(cutoff)},
        {SpaceDescriptor::sphere(3, cutoff), SpaceDescriptor::sphere(3, cutoff),
         SpaceDescriptor::sphere(5, cutoff)},
    };
}

bool loop_identity(std::string& detail)
{
    const auto two_spheres = fixture_wedges(21)[0];
    const HmReport deep = verify_hm(two_spheres, 20);
    if (!deep.ok) {
        detail = "S2 v S2 mismatch at degree " + std::to_string(*deep.first_mismatch);
        return false;
    }
    if (deep.lhs != geometric_inverse(TruncatedSeries::monomial(1, 20, 2))) {
        detail = "S2 v S2 loop series is not 1/(1-2t)";
        return false;
    }
    const auto wedges = fixture_wedges(15);
    for (size_t i = 1; i <= 2; ++i) {
        const HmReport rep = verify_hm(wedges[i], 14);
        if (!rep.ok) {
            detail = "wedge " + std::to_string(i) + " mismatch at degree " +
                     std::to_string(*rep.first_mismatch);
            return false;
        }
    }
    return true;
}

bool witt_lyndon_agreement(std::string& detail)
{
    for (int m = 1; m <= 3; ++m) {
        std::map<int, Int> counted;
        for (int n = 1; n <= 7; ++n)
            counted[n] = 0;
        for (const Word& w : lyndon_words(m, 7))
            counted[static_cast<int>(w.size())] += 1;
        for (int n = 1; n <= 7; ++n)
            if (counted[n] != witt_count(m, n)) {
                detail = "enumeration disagrees with the Witt formula at m=" +
                         std::to_string(m) + " n=" + std::to_string(n);
                return false;
            }
        for (long long p : {3LL, 5LL, 7LL}) {
            const auto ctx = even_context(m, p, 7);
            for (int n = 1; n <= 7; ++n)
                if (Int(lie_power_subspace(ctx, n).dim()) != witt_count(m, n)) {
                    detail = "bracket rank over F_" + std::to_string(p) +
                             " disagrees at m=" + std::to_string(m) + " n=" + std::to_string(n);
                    return false;
                }
        }
    }
    return true;
}

bool primitive_dimensions(std::string& detail)
{
    const auto line = even_context(1, 3, 9);
    for (int n = 1; n <= 9; ++n) {
        const int expected = (n == 1 || n == 3 || n == 9) ? 1 : 0;
        if (primitives(line, n).dim() != expected) {
            detail = "dim V = 1: primitives at length " + std::to_string(n);
            return false;
        }
    }
    const auto plane = even_context(2, 3, 6);
    for (int n = 1; n <= 6; ++n) {
        Int expected = witt_count(2, n);
        if (n % 3 == 0)
            expected += witt_count(2, n / 3);
        if (Int(primitives(plane, n).dim()) != expected) {
            detail = "dim V = 2: primitives at length " + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool subhopf_decomposition(std::string& detail)
{
    for (int dimv = 1; dimv <= 2; ++dimv)
        for (long long p : {3LL, 5LL}) {
            const std::string who = "dimv=" + std::to_string(dimv) + " p=" + std::to_string(p);
            const auto ctx = even_context(dimv, p, 6);
            const SubHopfResult r = analyze_family(ctx, lie_power_family(ctx, 6));
            if (!r.coalgebra_closed) {
                detail = who + ": coproduct closure fails";
                return false;
            }
            const auto full = geometric_inverse(TruncatedSeries::monomial(1, 6, dimv));
            if (mul(r.b, r.a) != full) {
                detail = who + ": b*a is not the tensor algebra series";
                return false;
            }
            if (mul(r.b, sub(TruncatedSeries::one(6), r.q)) != TruncatedSeries::one(6)) {
                detail = who + ": q != 1 - 1/b";
                return false;
            }
            for (int n = 0; n <= 6; ++n)
                if (r.quotient_dims[static_cast<size_t>(n)] != r.q.coeff(n)) {
                    detail = who + ": quotient dims differ from q at length " + std::to_string(n);
                    return false;
                }
            if (!primitive_localization_check(ctx, 6).ok) {
                detail = who + ": primitive localization fails";
                return false;
            }
        }
    return true;
}

bool porter_consistency(std::string& detail)
{
    for (const auto& ys : fixture_wedges(21)) {
        const int m = static_cast<int>(ys.size());
        const PorterHmReport rep = porter_hm_consistency(ys, 20);
        if (rep.skipped || !rep.ok) {
            detail = "m=" + std::to_string(m) +
                     (rep.skipped ? ": skipped" : ": mismatch at degree " +
                                                      std::to_string(*rep.first_mismatch));
            return false;
        }
        std::vector<LoopFactor> xs;
        for (const auto& y : ys)
            xs.push_back(looped(y));
        for (const auto& s : porter_fiber_summands(xs, m - 1))
            if (s.multiplicity != Int(static_cast<long long>(s.subset.size()) - 1)) {
                detail = "m=" + std::to_string(m) + ", k=m-1: multiplicity is not j-1";
                return false;
            }
    }
    return true;
}

bool stage_iteration(std::string& detail)
{
    for (const auto& ys : fixture_wedges(15)) {
        const StageReport rep = iterate_stages(ys, 14);
        if (!rep.matches_hm_index) {
            detail = "m=" + std::to_string(ys.size()) + ": factor multisets differ";
            return false;
        }
        if (!rep.bottoms_strictly_increase) {
            detail = "m=" + std::to_string(ys.size()) + ": fiber bottoms fail to increase";
            return false;
        }
    }
    return true;
}

bool pbw_identity(std::string& detail)
{
    for (int m = 1; m <= 3; ++m) {
        const PbwReport rep = pbw_series_check(m, 12);
        if (!rep.ok) {
            detail = "m=" + std::to_string(m) + " mismatch at degree " +
                     std::to_string(*rep.first_mismatch);
            return false;
        }
    }
    return true;
}

bool antipode_axiom(std::string& detail)
{
    const AntipodeReport rep = antipode(10);
    if (!rep.axiom_holds) {
        detail = "convolution axiom fails";
        return false;
    }
    if (!rep.matches_signed_formula) {
        detail = "signed closed form differs";
        return false;
    }
    if (rep.matches_unsigned_formula || rep.first_unsigned_mismatch != 1) {
        detail = "unsigned closed form does not fail at weight 1";
        return false;
    }
    return true;
}

bool qsymm_splittings(std::string& detail)
{
    const int cutoff = 30;
    const auto suspension = SpaceDescriptor::suspended_cp_infinity(cutoff).reduced_series();
    TruncatedSeries smash = TruncatedSeries::zero(cutoff);
    for (int a = 1; 2 * (a + 1) + 1 <= cutoff; ++a)
        for (int b = 1; 2 * (a + b) + 1 <= cutoff; ++b)
            smash.set_coeff(2 * (a + b) + 1, smash.coeff(2 * (a + b) + 1) + 1);
    for (int p : {3, 5}) {
        const std::string who = "p=" + std::to_string(p);
        const SplittingTable wedge = mnt_splitting(p, cutoff);
        TruncatedSeries wedge_sum = TruncatedSeries::zero(cutoff);
        for (int i = 1; i <= p - 1; ++i)
            wedge_sum += wedge.wedge_at(i);
        if (wedge_sum != suspension) {
            detail = who + ": wedge summands do not partition the suspension";
            return false;
        }
        const SplittingTable blocks = refined_splitting(p, cutoff);
        TruncatedSeries block_sum = TruncatedSeries::zero(cutoff);
        for (int i = 1; i <= p - 1; ++i)
            for (int j = 1; j <= p - 1; ++j)
                block_sum += blocks.block_at(i, j);
        if (block_sum != smash) {
            detail = who + ": refined blocks do not partition the smash";
            return false;
        }
        if (!ganea_loop_check(p, cutoff).ok) {
            detail = who + ": loop factorization fails";
            return false;
        }
        if (!qsymm_factorization_report(p, cutoff).refined_ok) {
            detail = who + ": refined factorization of 1/(1-c) fails";
            return false;
        }
    }
    return true;
}

/* Criterion 10 exercises the installed binary the way a user would; the
 * harness passes its location and the fixture tree through the
 * environment. */
std::string shell_capture(const std::string& cmd, int& code)
{
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, got);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

bool cli_determinism(std::string& detail)
{
    const char* cli = std::getenv("LOOPDEC_CLI");
    const char* fixtures = std::getenv("LOOPDEC_FIXTURES");
    if (cli == nullptr || fixtures == nullptr) {
        detail = "LOOPDEC_CLI or LOOPDEC_FIXTURES is not set";
        return false;
    }
    const std::string bin = std::string("\"") + cli + "\" ";
    const std::string fx = fixtures;
    const std::vector<std::string> runs = {
        "hm verify --spaces " + fx + "/spaces/two_spheres.json --cutoff 12",
        "hm verify --spaces " + fx + "/spaces/s3_s5.json --cutoff 14 --json",
        "hm verify --spaces " + fx + "/spaces/s3_sigma_cpinf.json --cutoff 14",
        "hm factors --spaces " + fx + "/spaces/three_spheres.json --cutoff 12 --tsv",
        "porter --spaces " + fx + "/spaces/three_spheres.json --k 2 --cutoff 12",
        "subhopf analyze --dimv 2 --prime 3 --maxlen 6 --json",
        "qsymm antipode --maxweight 6",
        "qsymm split --prime 3 --cutoff 20 --tsv",
        "qsymm verify --prime 5 --cutoff 24 --json",
        "lyndon --alphabet 3 --maxlen 5",
        "corpus check --root " + fx,
    };
    for (const auto& args : runs) {
        int code_first = 0;
        int code_second = 0;
        const std::string first = shell_capture(bin + args, code_first);
        const std::string second = shell_capture(bin + args, code_second);
        if (code_first != 0 || code_second != 0) {
            detail = "`" + args + "` exited " + std::to_string(code_first) + "/" +
                     std::to_string(code_second);
            return false;
        }
        if (first != second) {
            detail = "`" + args + "` output differs between invocations";
            return false;
        }
    }
    return true;
}

}  // namespace

int main()
{
    criterion(1, "loop series identity: S2 v S2 through 20; {S3,S5}, {S3,SigmaCPinf} through 14",
              5.0 * 3, loop_identity);
    criterion(2, "Lyndon count = Witt formula = bracket rank over F_p, m <= 3, n <= 7", 30.0,
              witt_lyndon_agreement);
    criterion(3, "primitive dimensions of T(V) at p = 3 (dim V = 1 through 9, dim V = 2 through 6)",
              60.0, primitive_dimensions);
    criterion(4, "Lie power family is coalgebra-split with matching series, dim V <= 2, p in {3,5}",
              120.0, subhopf_decomposition);
    criterion(5, "fiber wedge consistency through 20 with j-1 multiplicities at k = m-1", 10.0,
              porter_consistency);
    criterion(6, "stagewise iteration reproduces the factor multiset through 14", 30.0,
              stage_iteration);
    criterion(7, "free Lie series telescope for m in {1,2,3} through 12", 5.0, pbw_identity);
    criterion(8, "antipode axiom through weight 10; signed form matches, unsigned fails at 1",
              10.0, antipode_axiom);
    criterion(9, "residue splittings partition and factor the loop series through 30, p in {3,5}",
              10.0, qsymm_splittings);
    criterion(10, "every fixture invocation of the command line tool is byte-identical twice over",
              60.0, cli_determinism);

    if (criteria_failed == 0) {
        std::cout << "acceptance: all 10 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << criteria_failed << " of 10 criteria FAIL\n";
    return 1;
}
