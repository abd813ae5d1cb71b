#include "loopdec/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "loopdec/free_lie.hpp"
#include "loopdec/oracles.hpp"
#include "loopdec/qsymm.hpp"
#include "loopdec/serialize.hpp"
#include "loopdec/subhopf.hpp"

namespace loopdec {

namespace {

TensorContext make_context(int dimv, long long p, int maxlen)
{
    std::vector<Generator> gens;
    for (int i = 0; i < dimv; ++i)
        gens.push_back({std::string(1, static_cast<char>('a' + i)), 2});
    return TensorContext(gens, PrimeField(p), maxlen, 2 * maxlen);
}

nlohmann::json json_from_coeffs(const std::vector<Int>& coeffs)
{
    TruncatedSeries s = TruncatedSeries::zero(static_cast<int>(coeffs.size()) - 1);
    for (size_t d = 0; d < coeffs.size(); ++d)
        s.set_coeff(static_cast<int>(d), coeffs[d]);
    return json_from_series(s);
}

nlohmann::json counts_json(const LyndonCounts& counts)
{
    nlohmann::json by_length = nlohmann::json::object();
    for (const auto& [len, c] : counts.by_length)
        by_length[std::to_string(len)] = json_from_int(c);
    nlohmann::json by_multidegree = nlohmann::json::array();
    for (const auto& [alpha, c] : counts.by_multidegree)
        by_multidegree.push_back({{"alpha", alpha}, {"count", json_from_int(c)}});
    return nlohmann::json{{"by_length", std::move(by_length)},
                          {"by_multidegree", std::move(by_multidegree)}};
}

nlohmann::json terms_json(const QSymmElement& f)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : f.terms())
        terms.push_back({{"coeff", json_from_int(c)}, {"composition", alpha}});
    return nlohmann::json{{"terms", std::move(terms)}};
}

Fixture lyndon_fixture(int m, int max_len)
{
    Fixture fx;
    fx.module = "free_lie";
    fx.id = "lyndon_counts_m" + std::to_string(m);
    fx.oracle = "oracle_lyndon";
    fx.certified_cutoff = max_len;
    fx.input = {{"alphabet", m}, {"maxlen", max_len}};
    fx.expected = counts_json(oracle_lyndon(m, max_len));
    return fx;
}

Fixture product_fixture(int m, int cutoff)
{
    std::vector<std::vector<Int>> raw;
    nlohmann::json factors = nlohmann::json::array();
    for (int n = 1; n <= cutoff; ++n) {
        raw.push_back(oracle_inverse_power_factor(n, witt_count(m, n), cutoff));
        factors.push_back(json_from_coeffs(raw.back()));
    }
    Fixture fx;
    fx.module = "series";
    fx.id = "geometric_product_m" + std::to_string(m);
    fx.oracle = "oracle_series_product";
    fx.certified_cutoff = cutoff;
    fx.input = {{"cutoff", cutoff}, {"factors", std::move(factors)}};
    fx.expected = {{"product", json_from_coeffs(oracle_series_product(raw, cutoff))}};
    return fx;
}

Fixture primitives_fixture(int dimv, long long p, int maxlen)
{
    nlohmann::json dims = nlohmann::json::object();
    for (int n = 1; n <= maxlen; ++n)
        dims[std::to_string(n)] = oracle_primitives(dimv, p, n);
    Fixture fx;
    fx.module = "tensor_hopf";
    fx.id = "primitive_dims_v" + std::to_string(dimv) + "_p" + std::to_string(p);
    fx.oracle = "oracle_primitives";
    fx.certified_cutoff = maxlen;
    fx.input = {{"dimv", dimv}, {"maxlen", maxlen}, {"prime", p}};
    fx.expected = {{"dims", std::move(dims)}};
    return fx;
}

std::vector<int> non_power_lengths(long long p, int maxlen)
{
    std::vector<int> lengths;
    for (int n = 2; n <= maxlen; ++n) {
        bool power = false;
        for (long long q = p; q <= n; q *= p)
            if (q == n)
                power = true;
        if (!power)
            lengths.push_back(n);
    }
    return lengths;
}

Fixture subhopf_fixture(long long p)
{
    const int dimv = 2;
    const int maxlen = 6;
    const std::vector<Int> b = oracle_subalgebra_dims(dimv, p, non_power_lengths(p, maxlen), maxlen);
    const std::vector<Int> binv = oracle_unit_inverse(b);
    std::vector<Int> q(b.size(), 0);
    for (size_t k = 1; k < b.size(); ++k)
        q[k] = -binv[k];
    /* The ambient length series comes from the oracle too: the length-1
     * family generates the whole algebra. */
    const std::vector<Int> full = oracle_subalgebra_dims(dimv, p, {1}, maxlen);
    const std::vector<Int> a = oracle_series_product({full, binv}, maxlen);
    Fixture fx;
    fx.module = "subhopf";
    fx.id = "lie_family_v2_p" + std::to_string(p);
    fx.oracle = "oracle_subalgebra_dims";
    fx.certified_cutoff = maxlen;
    fx.input = {{"dimv", dimv}, {"family", "lie"}, {"maxlen", maxlen}, {"prime", p}};
    fx.expected = {{"a", json_from_coeffs(a)}, {"b", json_from_coeffs(b)}, {"q", json_from_coeffs(q)}};
    return fx;
}

Fixture qshuffle_fixture(const Composition& alpha, const Composition& beta, const std::string& id)
{
    Fixture fx;
    fx.module = "qsymm";
    fx.id = id;
    fx.oracle = "oracle_quasi_shuffle";
    fx.certified_cutoff = composition_weight(alpha) + composition_weight(beta);
    fx.input = {{"alpha", alpha}, {"beta", beta}};
    fx.expected = terms_json(oracle_quasi_shuffle(alpha, beta));
    return fx;
}

/* The same quantities computed along the exported code paths. Disagreement
 * with the oracle answer means one side is wrong; the corpus does not ask
 * which. */
nlohmann::json main_path_result(const Fixture& fx)
{
    if (fx.module == "free_lie") {
        const int m = fx.input["alphabet"].get<int>();
        const int max_len = fx.input["maxlen"].get<int>();
        LyndonCounts counts;
        for (const Word& w : lyndon_words(m, max_len)) {
            counts.by_length[static_cast<int>(w.size())] += 1;
            counts.by_multidegree[multidegree(w, m)] += 1;
        }
        return counts_json(counts);
    }
    if (fx.module == "series") {
        const int cutoff = fx.input["cutoff"].get<int>();
        TruncatedSeries acc = TruncatedSeries::one(cutoff);
        for (const auto& factor : fx.input["factors"])
            acc = mul(acc, series_from_json(factor));
        return nlohmann::json{{"product", json_from_series(acc)}};
    }
    if (fx.module == "tensor_hopf") {
        const auto ctx = make_context(fx.input["dimv"].get<int>(), fx.input["prime"].get<long long>(),
                                      fx.input["maxlen"].get<int>());
        nlohmann::json dims = nlohmann::json::object();
        for (int n = 1; n <= ctx.max_length(); ++n)
            dims[std::to_string(n)] = primitives(ctx, n).dim();
        return nlohmann::json{{"dims", std::move(dims)}};
    }
    if (fx.module == "subhopf") {
        const auto ctx = make_context(fx.input["dimv"].get<int>(), fx.input["prime"].get<long long>(),
                                      fx.input["maxlen"].get<int>());
        const auto result = analyze_family(ctx, lie_power_family(ctx, ctx.max_length()));
        return nlohmann::json{{"a", json_from_series(result.a)},
                              {"b", json_from_series(result.b)},
                              {"q", json_from_series(result.q)}};
    }
    if (fx.module == "qsymm") {
        const Composition alpha = fx.input["alpha"].get<Composition>();
        const Composition beta = fx.input["beta"].get<Composition>();
        return terms_json(quasi_shuffle(QSymmElement::monomial(alpha), QSymmElement::monomial(beta)));
    }
    throw std::logic_error("no main path wired for module " + fx.module);
}

/* Dotted path of the first difference, for error messages. Objects compare
 * key by key in sorted order, arrays index by index. */
std::string first_difference_path(const nlohmann::json& a, const nlohmann::json& b,
                                  const std::string& path)
{
    if (a == b)
        return "";
    if (a.is_object() && b.is_object()) {
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia.key() != ib.key())
                return path + "." + (ia.key() < ib.key() ? ia.key() : ib.key());
            const std::string sub = first_difference_path(ia.value(), ib.value(), path + "." + ia.key());
            if (!sub.empty())
                return sub;
            ++ia;
            ++ib;
        }
        return path + (ia != a.end() ? "." + ia.key() : "." + ib.key());
    }
    if (a.is_array() && b.is_array()) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            const std::string sub =
                first_difference_path(a[i], b[i], path + "[" + std::to_string(i) + "]");
            if (!sub.empty())
                return sub;
        }
        return path + ".length";
    }
    return path;
}

}  // namespace

nlohmann::json Fixture::meta() const
{
    return nlohmann::json{{"certified_cutoff", certified_cutoff},
                          {"id", id},
                          {"module", module},
                          {"oracle", oracle}};
}

std::vector<Fixture> corpus_fixtures()
{
    std::vector<Fixture> all;
    all.push_back(lyndon_fixture(2, 9));
    all.push_back(lyndon_fixture(3, 7));
    all.push_back(product_fixture(2, 10));
    all.push_back(product_fixture(3, 8));
    all.push_back(primitives_fixture(1, 3, 9));
    all.push_back(primitives_fixture(2, 3, 6));
    all.push_back(subhopf_fixture(3));
    all.push_back(subhopf_fixture(5));
    all.push_back(qshuffle_fixture({1, 2}, {2}, "quasi_shuffle_12_2"));
    all.push_back(qshuffle_fixture({1, 1}, {2, 1}, "quasi_shuffle_11_21"));
    return all;
}

std::string render_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int write_corpus(const std::string& root)
{
    const auto fixtures = corpus_fixtures();
    for (const auto& fx : fixtures) {
        const std::filesystem::path dir(fx.dir(root));
        std::filesystem::create_directories(dir);
        const std::pair<const char*, nlohmann::json> files[] = {
            {"input.json", fx.input}, {"expected.json", fx.expected}, {"meta.json", fx.meta()}};
        for (const auto& [name, doc] : files) {
            std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write " + (dir / name).string());
            out << render_json(doc);
        }
    }
    return static_cast<int>(fixtures.size());
}

CorpusReport check_corpus(const std::string& root)
{
    CorpusReport rep;
    for (const auto& fx : corpus_fixtures()) {
        ++rep.fixtures_checked;
        const std::string label = fx.module + "/" + fx.id;
        const std::string dir = fx.dir(root);
        const std::pair<const char*, std::string> files[] = {
            {"input.json", render_json(fx.input)},
            {"expected.json", render_json(fx.expected)},
            {"meta.json", render_json(fx.meta())}};
        for (const auto& [name, want] : files) {
            std::ifstream in(dir + "/" + name, std::ios::binary);
            if (!in) {
                rep.input_issues.push_back({label, std::string(name) + " is missing under " + root});
                continue;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            if (buf.str() != want)
                rep.mismatch_issues.push_back(
                    {label, std::string(name) + " differs from its regenerated bytes"});
        }
        const nlohmann::json got = main_path_result(fx);
        if (got != fx.expected)
            rep.mismatch_issues.push_back(
                {label, "main path disagrees with the oracle at " +
                            first_difference_path(got, fx.expected, "$")});
    }
    return rep;
}

}  // namespace loopdec
