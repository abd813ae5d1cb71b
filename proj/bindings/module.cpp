#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "loopdec/corpus.hpp"
#include "loopdec/free_lie.hpp"
#include "loopdec/hilton_milnor.hpp"
#include "loopdec/moment_angle.hpp"
#include "loopdec/qsymm.hpp"
#include "loopdec/subhopf.hpp"

namespace py = pybind11;
using namespace loopdec;

/* Arbitrary-precision coefficients cross the boundary as Python ints,
 * routed through their decimal form in both directions. */
namespace pybind11::detail {

template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool)
    {
        if (!isinstance<int_>(src))
            return false;
        value = Int(str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle)
    {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

TensorContext even_context(int dimv, long long p, int maxlen)
{
    if (dimv < 1 || dimv > 26)
        throw std::invalid_argument("dimv must be in [1, 26]");
    std::vector<Generator> gens;
    for (int i = 0; i < dimv; ++i)
        gens.push_back({std::string(1, static_cast<char>('a' + i)), 2});
    return TensorContext(gens, PrimeField(p), maxlen, 2 * maxlen);
}

std::vector<LoopFactor> loop_wedge(const std::vector<SpaceDescriptor>& ys)
{
    std::vector<LoopFactor> xs;
    xs.reserve(ys.size());
    for (const auto& y : ys)
        xs.push_back(looped(y));
    return xs;
}

std::vector<std::pair<Composition, Int>> term_list(const QSymmElement& f)
{
    std::vector<std::pair<Composition, Int>> out;
    for (const auto& [alpha, c] : f.terms())
        out.emplace_back(alpha, c);
    return out;
}

std::vector<std::pair<Composition, Int>> nsymm_term_list(const NSymmElement& f)
{
    std::vector<std::pair<Composition, Int>> out;
    for (const auto& [alpha, c] : f.terms())
        out.emplace_back(alpha, c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact truncated-series computations for loop space decompositions";

    /* ------------------------------------------------------------ series */

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def(py::init<int>(), py::arg("cutoff"))
        .def_static("zero", &TruncatedSeries::zero, py::arg("cutoff"))
        .def_static("one", &TruncatedSeries::one, py::arg("cutoff"))
        .def_static("constant", &TruncatedSeries::constant, py::arg("cutoff"), py::arg("value"))
        .def_static("monomial", &TruncatedSeries::monomial, py::arg("degree"), py::arg("cutoff"),
                    py::arg("coeff") = Int(1))
        .def("cutoff", &TruncatedSeries::cutoff)
        .def("coeff", &TruncatedSeries::coeff, py::arg("degree"))
        .def("set_coeff", &TruncatedSeries::set_coeff, py::arg("degree"), py::arg("value"))
        .def("is_zero", &TruncatedSeries::is_zero)
        .def("bottom_degree", &TruncatedSeries::bottom_degree)
        .def("truncated", &TruncatedSeries::truncated, py::arg("cutoff"))
        .def("coeffs",
             [](const TruncatedSeries& s) {
                 std::vector<Int> out;
                 for (int d = 0; d <= s.cutoff(); ++d)
                     out.push_back(s.coeff(d));
                 return out;
             })
        .def("__add__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); })
        .def("__sub__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); })
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); })
        .def("__pow__", [](const TruncatedSeries& s, int k) { return pow(s, k); })
        .def("__neg__", [](const TruncatedSeries& s) { return -s; })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("__repr__", [](const TruncatedSeries& s) { return to_string(s); });

    m.def("geometric_inverse", py::overload_cast<const TruncatedSeries&>(&geometric_inverse),
          py::arg("s"), "1/(1 - s) for a series with zero constant term");
    m.def("unit_inverse", &unit_inverse, py::arg("s"),
          "reciprocal of a series whose constant term is 1 or -1");
    m.def("power", [](const TruncatedSeries& s, int k) { return pow(s, k); }, py::arg("s"),
          py::arg("k"));
    m.def("shift", &shift, py::arg("s"), py::arg("offset"));
    m.def("first_difference", &first_difference, py::arg("a"), py::arg("b"));

    /* ---------------------------------------------------------- free Lie */

    m.def("is_lyndon", &is_lyndon, py::arg("word"));
    m.def("lyndon_words", &lyndon_words, py::arg("alphabet"), py::arg("max_len"));
    m.def("multidegree", &multidegree, py::arg("word"), py::arg("alphabet"));
    m.def("witt_count", &witt_count, py::arg("alphabet"), py::arg("length"));
    m.def("witt_count_multi", &witt_count_multi, py::arg("alpha"));

    py::class_<PbwReport>(m, "PbwReport")
        .def_readonly("lhs", &PbwReport::lhs)
        .def_readonly("rhs", &PbwReport::rhs)
        .def_readonly("first_mismatch", &PbwReport::first_mismatch)
        .def_readonly("ok", &PbwReport::ok);
    m.def("pbw_series_check", py::overload_cast<int, int>(&pbw_series_check), py::arg("alphabet"),
          py::arg("cutoff"));

    m.def(
        "primitives_dim",
        [](int dimv, long long p, int n) {
            return primitives(even_context(dimv, p, n), n).dim();
        },
        py::arg("dimv"), py::arg("p"), py::arg("n"),
        "dimension of the tensor-length-n primitives of T(V) over F_p, "
        "generators in one even degree");

    /* ------------------------------------------------------------ spaces */

    py::class_<SpaceDescriptor>(m, "SpaceDescriptor")
        .def(py::init<std::string, TruncatedSeries>(), py::arg("name"), py::arg("reduced"))
        .def_static("sphere", &SpaceDescriptor::sphere, py::arg("n"), py::arg("cutoff"))
        .def_static("suspended_cp_infinity", &SpaceDescriptor::suspended_cp_infinity,
                    py::arg("cutoff"))
        .def("name", &SpaceDescriptor::name)
        .def("cutoff", &SpaceDescriptor::cutoff)
        .def("reduced_series", &SpaceDescriptor::reduced_series)
        .def("connectivity", &SpaceDescriptor::connectivity)
        .def("__repr__",
             [](const SpaceDescriptor& y) { return "<SpaceDescriptor " + y.name() + ">"; });
    m.def("loop_series", &loop_series, py::arg("y"),
          "loop space homology series, certified one degree below the descriptor");

    /* ----------------------------------------------- wedge decomposition */

    py::class_<HMFactor>(m, "HMFactor")
        .def_readonly("alpha", &HMFactor::alpha)
        .def_readonly("multiplicity", &HMFactor::multiplicity)
        .def_readonly("bottom", &HMFactor::bottom)
        .def_readonly("summand", &HMFactor::summand)
        .def_readonly("loop", &HMFactor::loop);
    py::class_<HmReport>(m, "HmReport")
        .def_readonly("lhs", &HmReport::lhs)
        .def_readonly("rhs", &HmReport::rhs)
        .def_readonly("factor_count", &HmReport::factor_count)
        .def_readonly("first_mismatch", &HmReport::first_mismatch)
        .def_readonly("ok", &HmReport::ok);
    m.def("hm_index", &hm_index, py::arg("spaces"), py::arg("cutoff"));
    m.def("verify_hm", &verify_hm, py::arg("spaces"), py::arg("cutoff"));

    /* ------------------------------------------------------ fiber wedges */

    m.def(
        "porter_summands",
        [](const std::vector<SpaceDescriptor>& ys, int k) {
            std::vector<std::tuple<std::vector<int>, Int, TruncatedSeries>> out;
            for (const auto& s : porter_fiber_summands(loop_wedge(ys), k))
                out.emplace_back(s.subset, s.multiplicity, s.series);
            return out;
        },
        py::arg("spaces"), py::arg("k"),
        "(subset, multiplicity, series) triples of the fiber wedge, subsets 0-based");
    m.def(
        "porter_series",
        [](const std::vector<SpaceDescriptor>& ys, int k) {
            return porter_fiber_series(loop_wedge(ys), k);
        },
        py::arg("spaces"), py::arg("k"));
    py::class_<PorterHmReport>(m, "PorterHmReport")
        .def_readonly("skipped", &PorterHmReport::skipped)
        .def_readonly("note", &PorterHmReport::note)
        .def_readonly("lhs", &PorterHmReport::lhs)
        .def_readonly("rhs", &PorterHmReport::rhs)
        .def_readonly("first_mismatch", &PorterHmReport::first_mismatch)
        .def_readonly("ok", &PorterHmReport::ok);
    m.def("porter_hm_consistency", &porter_hm_consistency, py::arg("spaces"), py::arg("cutoff"));

    /* ----------------------------------------------------------- subhopf */

    py::class_<SubHopfResult>(m, "SubHopfResult")
        .def_readonly("b", &SubHopfResult::b)
        .def_readonly("q", &SubHopfResult::q)
        .def_readonly("a", &SubHopfResult::a)
        .def_readonly("quotient_dims", &SubHopfResult::quotient_dims)
        .def_readonly("coalgebra_closed", &SubHopfResult::coalgebra_closed)
        .def("filtration_ok", [](const SubHopfResult& r) {
            for (const auto& check : r.filtration_checks)
                if (!check.passed)
                    return false;
            return true;
        });
    m.def(
        "analyze_lie_family",
        [](int dimv, long long p, int maxlen) {
            const auto ctx = even_context(dimv, p, maxlen);
            return analyze_family(ctx, lie_power_family(ctx, maxlen));
        },
        py::arg("dimv"), py::arg("p"), py::arg("maxlen"),
        "series data of the subalgebra generated by the non-p-power Lie powers; "
        "raises ValueError when the family is not coalgebra-split");
    m.def(
        "primitive_localization_ok",
        [](int dimv, long long p, int maxlen) {
            return primitive_localization_check(even_context(dimv, p, maxlen), maxlen).ok;
        },
        py::arg("dimv"), py::arg("p"), py::arg("maxlen"));

    /* ------------------------------------------------------------- qsymm */

    py::class_<AntipodeReport>(m, "AntipodeReport")
        .def_readonly("max_weight", &AntipodeReport::max_weight)
        .def_readonly("axiom_holds", &AntipodeReport::axiom_holds)
        .def_readonly("matches_signed_formula", &AntipodeReport::matches_signed_formula)
        .def_readonly("matches_unsigned_formula", &AntipodeReport::matches_unsigned_formula)
        .def_readonly("first_unsigned_mismatch", &AntipodeReport::first_unsigned_mismatch)
        .def(
            "chi",
            [](const AntipodeReport& rep, int n) {
                if (n < 1 || n > rep.max_weight)
                    throw std::out_of_range("weight outside [1, max_weight]");
                return nsymm_term_list(rep.chi[static_cast<size_t>(n)]);
            },
            py::arg("n"), "antipode of the weight-n generator as (composition, coeff) pairs");
    m.def("antipode", &antipode, py::arg("max_weight"));

    m.def(
        "quasi_shuffle",
        [](const Composition& alpha, const Composition& beta) {
            return term_list(
                quasi_shuffle(QSymmElement::monomial(alpha), QSymmElement::monomial(beta)));
        },
        py::arg("alpha"), py::arg("beta"),
        "product of two monomial quasi-symmetric functions as (composition, coeff) pairs");

    py::class_<SplittingTable>(m, "SplittingTable")
        .def_readonly("prime", &SplittingTable::prime)
        .def_readonly("cutoff", &SplittingTable::cutoff)
        .def_readonly("note", &SplittingTable::note)
        .def("wedge_at", &SplittingTable::wedge_at, py::arg("i"))
        .def("block_at", &SplittingTable::block_at, py::arg("i"), py::arg("j"))
        .def("symmetric_at", &SplittingTable::symmetric_at, py::arg("i"), py::arg("j"))
        .def("antisymmetric_at", &SplittingTable::antisymmetric_at, py::arg("i"), py::arg("j"));
    m.def("mnt_splitting", &mnt_splitting, py::arg("p"), py::arg("cutoff"));
    m.def("refined_splitting", &refined_splitting, py::arg("p"), py::arg("cutoff"));

    py::class_<GaneaReport>(m, "GaneaReport")
        .def_readonly("lhs", &GaneaReport::lhs)
        .def_readonly("algebraic_rhs", &GaneaReport::algebraic_rhs)
        .def_readonly("refined_rhs", &GaneaReport::refined_rhs)
        .def_readonly("first_algebraic_mismatch", &GaneaReport::first_algebraic_mismatch)
        .def_readonly("first_refined_mismatch", &GaneaReport::first_refined_mismatch)
        .def_readonly("algebraic_ok", &GaneaReport::algebraic_ok)
        .def_readonly("refined_ok", &GaneaReport::refined_ok)
        .def_readonly("ok", &GaneaReport::ok);
    m.def("ganea_loop_check", &ganea_loop_check, py::arg("p"), py::arg("cutoff"));

    py::class_<FactorizationReport>(m, "FactorizationReport")
        .def_readonly("target", &FactorizationReport::target)
        .def_readonly("wedge_summands", &FactorizationReport::wedge_summands)
        .def_readonly("refined_summands", &FactorizationReport::refined_summands)
        .def_readonly("wedge_ok", &FactorizationReport::wedge_ok)
        .def_readonly("refined_ok", &FactorizationReport::refined_ok)
        .def_readonly("strictly_finer", &FactorizationReport::strictly_finer);
    m.def("qsymm_factorization_report", &qsymm_factorization_report, py::arg("p"),
          py::arg("cutoff"));

    /* ------------------------------------------------------------ corpus */

    py::class_<CorpusReport>(m, "CorpusReport")
        .def_readonly("fixtures_checked", &CorpusReport::fixtures_checked)
        .def("ok", &CorpusReport::ok)
        .def("issues", [](const CorpusReport& rep) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& issue : rep.input_issues)
                out.emplace_back(issue.fixture, issue.message);
            for (const auto& issue : rep.mismatch_issues)
                out.emplace_back(issue.fixture, issue.message);
            return out;
        });
    m.def("write_corpus", &write_corpus, py::arg("root"));
    m.def("check_corpus", &check_corpus, py::arg("root"));
}
