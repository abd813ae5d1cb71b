#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopdec/corpus.hpp"
#include "loopdec/free_lie.hpp"
#include "loopdec/hilton_milnor.hpp"
#include "loopdec/moment_angle.hpp"
#include "loopdec/qsymm.hpp"
#include "loopdec/serialize.hpp"
#include "loopdec/spacefile.hpp"
#include "loopdec/subhopf.hpp"

using namespace loopdec;

namespace {

/* Exit codes: 0 verified, 1 a verification ran and failed, 2 bad input.
 * CliError carries the code for failures detected before any math runs. */
struct CliError {
    int code;
    std::string message;
};

enum class Format { text, json, tsv };

struct Options {
    std::optional<long long> prime;
    std::optional<int> cutoff;
    std::optional<int> maxlen;
    bool as_json = false;
    bool as_tsv = false;
    bool quiet = false;

    Format format() const
    {
        return as_json ? Format::json : as_tsv ? Format::tsv : Format::text;
    }
};

long long require_prime(const Options& o)
{
    if (!o.prime)
        throw CliError{2, "this command needs --prime"};
    return *o.prime;
}

int require_cutoff(const Options& o)
{
    if (!o.cutoff)
        throw CliError{2, "this command needs --cutoff"};
    if (*o.cutoff < 0)
        throw CliError{2, "--cutoff must be >= 0"};
    return *o.cutoff;
}

int require_maxlen(const Options& o)
{
    if (!o.maxlen)
        throw CliError{2, "this command needs --maxlen"};
    if (*o.maxlen < 1)
        throw CliError{2, "--maxlen must be >= 1"};
    return *o.maxlen;
}

/* One row shape for all three output formats, so they cannot drift. Text
 * mode aligns columns; TSV leads with a versioned tag line. */
struct TableSpec {
    std::string tsv_tag;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void print_table(const TableSpec& t, Format fmt, std::ostream& out)
{
    if (fmt == Format::tsv) {
        out << "#loopdec-tsv\t1\t" << t.tsv_tag << "\n";
        for (size_t c = 0; c < t.columns.size(); ++c)
            out << (c ? "\t" : "") << t.columns[c];
        out << "\n";
        for (const auto& row : t.rows) {
            for (size_t c = 0; c < row.size(); ++c)
                out << (c ? "\t" : "") << row[c];
            out << "\n";
        }
        return;
    }
    std::vector<size_t> width(t.columns.size(), 0);
    for (size_t c = 0; c < t.columns.size(); ++c)
        width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    const auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << "\n";
    };
    line(t.columns);
    for (const auto& row : t.rows)
        line(row);
}

void emit_json(const nlohmann::json& doc)
{
    std::cout << doc.dump(2) << "\n";
}

nlohmann::json json_from_optional(const std::optional<int>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json();
}

std::string render_alpha(const std::vector<int>& alpha)
{
    std::string out = "(";
    for (size_t i = 0; i < alpha.size(); ++i)
        out += (i ? "," : "") + std::to_string(alpha[i]);
    return out + ")";
}

/* Coordinate subsets print 1-based, matching the order spaces appear in
 * the input file. */
std::string render_subset(const std::vector<int>& subset)
{
    std::string out = "{";
    for (size_t i = 0; i < subset.size(); ++i)
        out += (i ? "," : "") + std::to_string(subset[i] + 1);
    return out + "}";
}

std::vector<int> one_based(const std::vector<int>& subset)
{
    std::vector<int> out;
    out.reserve(subset.size());
    for (int i : subset)
        out.push_back(i + 1);
    return out;
}

std::string render_zword(const Composition& alpha)
{
    if (alpha.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < alpha.size(); ++i)
        out += (i ? " z" : "z") + std::to_string(alpha[i]);
    return out;
}

std::string render_nsymm(const NSymmElement& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : x.terms()) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || alpha.empty())
            out += mag.str() + (alpha.empty() ? "" : " ");
        if (!alpha.empty())
            out += render_zword(alpha);
    }
    return out;
}

std::vector<std::string> descriptor_names(const std::vector<SpaceDescriptor>& ys)
{
    std::vector<std::string> names;
    names.reserve(ys.size());
    for (const auto& y : ys)
        names.push_back(y.name());
    return names;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

nlohmann::json load_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CliError{2, "cannot open file: " + path};
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw CliError{2, path + ": " + e.what()};
    }
}

TruncatedSeries load_series_file(const std::string& path)
{
    try {
        return series_from_json(load_json_file(path));
    } catch (const std::invalid_argument& e) {
        throw CliError{2, path + ": " + e.what()};
    }
}

TensorContext make_even_context(int dimv, long long p, int maxlen)
{
    if (dimv < 1 || dimv > 26)
        throw CliError{2, "--dimv must be in [1, 26]"};
    std::vector<Generator> gens;
    for (int i = 0; i < dimv; ++i)
        gens.push_back({std::string(1, static_cast<char>('a' + i)), 2});
    return TensorContext(gens, PrimeField(p), maxlen, 2 * maxlen);
}

/* ---------------------------------------------------------------- series */

int run_series_result(const Options& o, TruncatedSeries s, const std::string& label)
{
    if (o.cutoff) {
        if (*o.cutoff > s.cutoff())
            throw CliError{2, "requested cutoff " + std::to_string(*o.cutoff) +
                                  " exceeds the certified cutoff " + std::to_string(s.cutoff())};
        s = s.truncated(*o.cutoff);
    }
    if (o.format() == Format::json) {
        emit_json({{"label", label}, {"series", json_from_series(s)}});
        return 0;
    }
    if (o.format() == Format::tsv) {
        TableSpec t{"series", {"degree", "coeff"}, {}};
        for (int d = 0; d <= s.cutoff(); ++d)
            if (s.coeff(d) != 0)
                t.rows.push_back({std::to_string(d), s.coeff(d).str()});
        print_table(t, Format::tsv, std::cout);
        return 0;
    }
    std::cout << label << " = " << to_string(s) << "\n";
    return 0;
}

int run_series_mul(const Options& o, const std::vector<std::string>& paths)
{
    TruncatedSeries acc = load_series_file(paths.front());
    for (size_t i = 1; i < paths.size(); ++i)
        acc = mul(acc, load_series_file(paths[i]));
    return run_series_result(o, std::move(acc), "product");
}

int run_series_invert(const Options& o, const std::string& path, const std::string& mode)
{
    const TruncatedSeries s = load_series_file(path);
    if (mode == "geometric" || (mode == "auto" && s.coeff(0) == 0))
        return run_series_result(o, geometric_inverse(s), "geometric inverse");
    return run_series_result(o, unit_inverse(s), "inverse");
}

int run_series_pow(const Options& o, const std::string& path, int exponent)
{
    if (exponent < 0)
        throw CliError{2, "--exp must be >= 0"};
    return run_series_result(o, pow(load_series_file(path), exponent), "power");
}

/* ---------------------------------------------------------------- lyndon */

int run_lyndon(const Options& o, int m)
{
    const int maxlen = require_maxlen(o);
    if (m < 1 || m > 26)
        throw CliError{2, "--alphabet must be in [1, 26]"};
    const auto words = lyndon_words(m, maxlen);
    TableSpec t{"lyndon-words", {"length", "multidegree", "word", "witt"}, {}};
    nlohmann::json rows = nlohmann::json::array();
    for (const Word& w : words) {
        const auto alpha = multidegree(w, m);
        std::string text;
        for (int g : w)
            text += static_cast<char>('a' + g);
        const Int witt = witt_count_multi(alpha);
        t.rows.push_back(
            {std::to_string(w.size()), render_alpha(alpha), text, witt.str()});
        rows.push_back({{"length", w.size()},
                        {"multidegree", alpha},
                        {"witt", json_from_int(witt)},
                        {"word", text}});
    }
    if (o.format() == Format::json) {
        emit_json({{"alphabet", m}, {"maxlen", maxlen}, {"words", std::move(rows)}});
        return 0;
    }
    print_table(t, o.format(), std::cout);
    if (o.format() == Format::text)
        std::cout << words.size() << " Lyndon words over " << m << " letters through length "
                  << maxlen << "\n";
    return 0;
}

/* -------------------------------------------------------------------- hm */

std::vector<SpaceDescriptor> load_wedge(const std::string& path, int descriptor_cutoff)
{
    return materialize_spaces(load_space_file(path), descriptor_cutoff);
}

int run_hm_verify(const Options& o, const std::string& path)
{
    const int cutoff = require_cutoff(o);
    /* Descriptors reach one degree past the comparison so every factor
     * series is certified down to its bottom degree. */
    const auto ys = load_wedge(path, cutoff + 1);
    const HmReport rep = verify_hm(ys, cutoff);
    const std::string verdict =
        rep.ok ? "identity holds through degree " + std::to_string(cutoff)
               : "identity fails first at degree " + std::to_string(*rep.first_mismatch);
    if (o.format() == Format::json) {
        emit_json({{"cutoff", cutoff},
                   {"factor_count", rep.factor_count},
                   {"first_mismatch", json_from_optional(rep.first_mismatch)},
                   {"lhs", json_from_series(rep.lhs)},
                   {"ok", rep.ok},
                   {"rhs", json_from_series(rep.rhs)},
                   {"spaces", descriptor_names(ys)},
                   {"verdict", verdict}});
    } else if (o.format() == Format::tsv) {
        if (!o.quiet) {
            TableSpec t{"hm-verify", {"degree", "lhs", "rhs"}, {}};
            for (int d = 0; d <= cutoff; ++d)
                t.rows.push_back(
                    {std::to_string(d), rep.lhs.coeff(d).str(), rep.rhs.coeff(d).str()});
            print_table(t, Format::tsv, std::cout);
        }
        std::cout << "# " << verdict << "\n";
    } else {
        if (!o.quiet) {
            std::cout << "wedge: " << join(descriptor_names(ys), " v ") << "\n";
            std::cout << "loop series = " << to_string(rep.lhs) << "\n";
            std::cout << "factors with homology through degree " << cutoff << ": "
                      << rep.factor_count << "\n";
        }
        std::cout << verdict << "\n";
    }
    return rep.ok ? 0 : 1;
}

int run_hm_factors(const Options& o, const std::string& path)
{
    const int cutoff = require_cutoff(o);
    const auto ys = load_wedge(path, cutoff + 1);
    const auto factors = hm_index(ys, cutoff);
    TableSpec t{"hm-factors", {"multidegree", "multiplicity", "bottom", "loop_series"}, {}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& f : factors) {
        t.rows.push_back({render_alpha(f.alpha), f.multiplicity.str(), std::to_string(f.bottom),
                          to_string(f.loop)});
        rows.push_back({{"bottom", f.bottom},
                        {"loop_series", json_from_series(f.loop)},
                        {"multidegree", f.alpha},
                        {"multiplicity", json_from_int(f.multiplicity)}});
    }
    if (o.format() == Format::json) {
        emit_json({{"cutoff", cutoff},
                   {"factor_count", factors.size()},
                   {"factors", std::move(rows)},
                   {"spaces", descriptor_names(ys)}});
        return 0;
    }
    if (!o.quiet)
        print_table(t, o.format(), std::cout);
    if (o.format() == Format::text)
        std::cout << factors.size() << " factors with homology through degree " << cutoff << "\n";
    return 0;
}

/* ----------------------------------------------------------------- porter */

int run_porter(const Options& o, const std::string& path, int k)
{
    const int cutoff = require_cutoff(o);
    const auto ys = load_wedge(path, cutoff + 1);
    std::vector<LoopFactor> xs;
    xs.reserve(ys.size());
    for (const auto& y : ys)
        xs.push_back(looped(y));
    const auto summands = porter_fiber_summands(xs, k);
    const TruncatedSeries total = porter_fiber_series(xs, k);
    TableSpec t{"porter-fiber", {"subset", "j", "multiplicity", "series"}, {}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : summands) {
        t.rows.push_back({render_subset(s.subset), std::to_string(s.subset.size()),
                          s.multiplicity.str(), to_string(s.series)});
        rows.push_back({{"j", s.subset.size()},
                        {"multiplicity", json_from_int(s.multiplicity)},
                        {"series", json_from_series(s.series)},
                        {"subset", one_based(s.subset)}});
    }
    if (o.format() == Format::json) {
        emit_json({{"cutoff", cutoff},
                   {"k", k},
                   {"spaces", descriptor_names(ys)},
                   {"summands", std::move(rows)},
                   {"total", json_from_series(total)}});
        return 0;
    }
    if (!o.quiet)
        print_table(t, o.format(), std::cout);
    if (o.format() == Format::tsv)
        std::cout << "# total = " << to_string(total) << "\n";
    else
        std::cout << "total = " << to_string(total) << "\n";
    return 0;
}

/* ---------------------------------------------------------------- subhopf */

GeneratingFamily family_from_file(const std::string& path, const TensorContext& ctx)
{
    const nlohmann::json doc = load_json_file(path);
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw CliError{2, path + ": a family file needs {\"generators\": [...]}"};
    GeneratingFamily family;
    for (const auto& gen : doc["generators"]) {
        if (!gen.is_object() || !gen.contains("length") || !gen["length"].is_number_integer() ||
            !gen.contains("vectors") || !gen["vectors"].is_array())
            throw CliError{2, path + ": each generator needs a \"length\" and a \"vectors\" list"};
        const int length = gen["length"].get<int>();
        if (length < 1 || length > ctx.max_length())
            throw CliError{2, path + ": generator length " + std::to_string(length) +
                                  " outside [1, " + std::to_string(ctx.max_length()) + "]"};
        const long long ambient = ctx.words_of_length(length);
        const auto& vectors = gen["vectors"];
        FpMatrix rows(ctx.field(), static_cast<int>(vectors.size()), static_cast<int>(ambient));
        for (size_t r = 0; r < vectors.size(); ++r) {
            if (!vectors[r].is_array() || vectors[r].size() != static_cast<size_t>(ambient))
                throw CliError{2, path + ": vectors at length " + std::to_string(length) +
                                      " must have " + std::to_string(ambient) + " entries"};
            for (size_t c = 0; c < vectors[r].size(); ++c) {
                if (!vectors[r][c].is_number_integer())
                    throw CliError{2, path + ": vector entries must be integers"};
                rows.set(static_cast<int>(r), static_cast<int>(c), vectors[r][c].get<long long>());
            }
        }
        family.push_back({length, Subspace::span(rows)});
    }
    if (family.empty())
        throw CliError{2, path + ": the family is empty"};
    return family;
}

int run_subhopf(const Options& o, int dimv, const std::string& family_spec)
{
    const long long p = require_prime(o);
    const int maxlen = require_maxlen(o);
    const auto ctx = make_even_context(dimv, p, maxlen);
    GeneratingFamily family;
    if (family_spec == "lie")
        family = lie_power_family(ctx, maxlen);
    else if (family_spec == "full")
        family = {{1, Subspace::full(ctx.field(), dimv)}};
    else
        family = family_from_file(family_spec, ctx);

    std::optional<SubHopfResult> result;
    try {
        result = analyze_family(ctx, family);
    } catch (const std::domain_error& e) {
        /* The family failed the splitting test; that is a verification
         * result, not an input problem. */
        if (o.format() == Format::json)
            emit_json({{"ok", false}, {"verdict", e.what()}});
        else
            std::cout << e.what() << "\n";
        return 1;
    }
    const SubHopfResult& r = *result;

    const TruncatedSeries full =
        geometric_inverse(TruncatedSeries::monomial(1, maxlen, Int(dimv)));
    const bool identity_ok = mul(r.b, r.a) == full;
    bool filtration_ok = true;
    for (const auto& check : r.filtration_checks)
        filtration_ok = filtration_ok && check.passed;
    bool quotients_ok = true;
    for (int n = 0; n <= maxlen; ++n)
        quotients_ok = quotients_ok && r.quotient_dims[static_cast<size_t>(n)] == r.q.coeff(n);
    bool localization_ok = true;
    std::optional<LocalizationReport> localization;
    if (family_spec == "lie") {
        localization = primitive_localization_check(ctx, maxlen);
        localization_ok = localization->ok;
    }
    const bool ok =
        r.coalgebra_closed && identity_ok && filtration_ok && quotients_ok && localization_ok;
    const std::string range = "through length " + std::to_string(maxlen);
    const std::string verdict = ok ? "family is coalgebra-split " + range
                                   : "family fails the splitting checks " + range;

    if (o.format() == Format::json) {
        nlohmann::json quotients = nlohmann::json::array();
        for (const Int& d : r.quotient_dims)
            quotients.push_back(json_from_int(d));
        emit_json({{"a", json_from_series(r.a)},
                   {"b", json_from_series(r.b)},
                   {"coalgebra_closed", r.coalgebra_closed},
                   {"filtration_ok", filtration_ok},
                   {"identity_ok", identity_ok},
                   {"localization_ok", localization_ok},
                   {"maxlen", maxlen},
                   {"ok", ok},
                   {"prime", p},
                   {"q", json_from_series(r.q)},
                   {"quotient_dims", std::move(quotients)},
                   {"quotients_ok", quotients_ok},
                   {"verdict", verdict}});
        return ok ? 0 : 1;
    }
    if (o.format() == Format::tsv) {
        if (!o.quiet) {
            TableSpec t{"subhopf-series", {"length", "b", "q", "a"}, {}};
            for (int n = 0; n <= maxlen; ++n)
                t.rows.push_back({std::to_string(n), r.b.coeff(n).str(), r.q.coeff(n).str(),
                                  r.a.coeff(n).str()});
            print_table(t, Format::tsv, std::cout);
        }
        std::cout << "# " << verdict << "\n";
        return ok ? 0 : 1;
    }
    if (!o.quiet) {
        std::cout << "context: " << dimv << " generators over F_" << p << ", tensor lengths "
                  << range << "\n";
        std::cout << "b = " << to_string(r.b) << "\n";
        std::cout << "q = " << to_string(r.q) << "\n";
        std::cout << "a = " << to_string(r.a) << "\n";
        std::cout << "coalgebra closure: " << (r.coalgebra_closed ? "holds " : "fails ") << range
                  << "\n";
        std::cout << "series identity b*a = T(V): " << (identity_ok ? "holds " : "fails ") << range
                  << "\n";
        std::cout << "filtration quotients: " << (filtration_ok ? "consistent " : "inconsistent ")
                  << range << "\n";
        std::cout << "indecomposables match q: " << (quotients_ok ? "yes" : "no") << "\n";
        if (localization)
            std::cout << "primitive localization: "
                      << (localization_ok ? "passes " : "fails ") << range << "\n";
    }
    std::cout << verdict << "\n";
    return ok ? 0 : 1;
}

/* ------------------------------------------------------------------ qsymm */

int run_qsymm_antipode(const Options& o, int max_weight)
{
    if (max_weight < 1)
        throw CliError{2, "--maxweight must be >= 1"};
    const AntipodeReport rep = antipode(max_weight);
    std::vector<std::string> notes;
    notes.push_back(std::string("antipode axiom: ") + (rep.axiom_holds ? "holds" : "fails") +
                    " through weight " + std::to_string(max_weight));
    notes.push_back(std::string("signed closed form: ") +
                    (rep.matches_signed_formula ? "matches" : "differs") + " through weight " +
                    std::to_string(max_weight));
    notes.push_back(rep.first_unsigned_mismatch
                        ? "unsigned closed form: first differs at weight " +
                              std::to_string(*rep.first_unsigned_mismatch)
                        : "unsigned closed form: matches through weight " +
                              std::to_string(max_weight));
    if (o.format() == Format::json) {
        nlohmann::json chi = nlohmann::json::array();
        for (int n = 1; n <= max_weight; ++n) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [alpha, c] : rep.chi[static_cast<size_t>(n)].terms())
                terms.push_back({{"coeff", json_from_int(c)}, {"composition", alpha}});
            chi.push_back({{"n", n}, {"terms", std::move(terms)}});
        }
        emit_json({{"axiom_holds", rep.axiom_holds},
                   {"chi", std::move(chi)},
                   {"matches_signed_formula", rep.matches_signed_formula},
                   {"matches_unsigned_formula", rep.matches_unsigned_formula},
                   {"maxweight", max_weight},
                   {"notes", notes}});
        return rep.axiom_holds ? 0 : 1;
    }
    if (o.format() == Format::tsv) {
        if (!o.quiet) {
            TableSpec t{"qsymm-antipode", {"n", "chi"}, {}};
            for (int n = 1; n <= max_weight; ++n)
                t.rows.push_back(
                    {std::to_string(n), render_nsymm(rep.chi[static_cast<size_t>(n)])});
            print_table(t, Format::tsv, std::cout);
        }
        for (const auto& note : notes)
            std::cout << "# " << note << "\n";
        return rep.axiom_holds ? 0 : 1;
    }
    if (!o.quiet)
        for (int n = 1; n <= max_weight; ++n)
            std::cout << "chi(z" << n << ") = " << render_nsymm(rep.chi[static_cast<size_t>(n)])
                      << "\n";
    for (const auto& note : notes)
        std::cout << note << "\n";
    return rep.axiom_holds ? 0 : 1;
}

int run_qsymm_split(const Options& o, bool /*unused*/)
{
    const int p = static_cast<int>(require_prime(o));
    const int cutoff = require_cutoff(o);
    const SplittingTable wedge = mnt_splitting(p, cutoff);
    const SplittingTable blocks = refined_splitting(p, cutoff);
    if (o.format() == Format::json) {
        nlohmann::json wedges = nlohmann::json::array();
        for (int i = 1; i <= p - 1; ++i)
            wedges.push_back({{"i", i}, {"series", json_from_series(wedge.wedge_at(i))}});
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 1; i <= p - 1; ++i)
            for (int j = 1; j <= p - 1; ++j)
                rows.push_back({{"antisymmetric", json_from_series(blocks.antisymmetric_at(i, j))},
                                {"i", i},
                                {"j", j},
                                {"symmetric", json_from_series(blocks.symmetric_at(i, j))},
                                {"total", json_from_series(blocks.block_at(i, j))}});
        emit_json({{"blocks", std::move(rows)},
                   {"cutoff", cutoff},
                   {"note", blocks.note},
                   {"prime", p},
                   {"wedge", std::move(wedges)}});
        return 0;
    }
    if (o.format() == Format::tsv) {
        TableSpec t{"qsymm-split", {"piece", "series"}, {}};
        for (int i = 1; i <= p - 1; ++i)
            t.rows.push_back({"A_" + std::to_string(i), to_string(wedge.wedge_at(i))});
        for (int i = 1; i <= p - 1; ++i)
            for (int j = 1; j <= p - 1; ++j) {
                const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                t.rows.push_back({"A+" + ij, to_string(blocks.symmetric_at(i, j))});
                t.rows.push_back({"A-" + ij, to_string(blocks.antisymmetric_at(i, j))});
            }
        print_table(t, Format::tsv, std::cout);
        std::cout << "# note: " << blocks.note << "\n";
        return 0;
    }
    if (!o.quiet) {
        std::cout << "wedge summands of the suspension at p = " << p << " through degree "
                  << cutoff << ":\n";
        for (int i = 1; i <= p - 1; ++i)
            std::cout << "  A_" << i << " = " << to_string(wedge.wedge_at(i)) << "\n";
        std::cout << "refined blocks of the smash through degree " << cutoff << ":\n";
        for (int i = 1; i <= p - 1; ++i)
            for (int j = 1; j <= p - 1; ++j) {
                const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                std::cout << "  A+" << ij << " = " << to_string(blocks.symmetric_at(i, j)) << "\n";
                std::cout << "  A-" << ij << " = " << to_string(blocks.antisymmetric_at(i, j))
                          << "\n";
            }
    }
    std::cout << "note: " << blocks.note << "\n";
    return 0;
}

int run_qsymm_verify(const Options& o)
{
    const int p = static_cast<int>(require_prime(o));
    const int cutoff = require_cutoff(o);
    const std::string range = "through degree " + std::to_string(cutoff);

    struct Check {
        std::string line;
        bool ok;
    };
    std::vector<Check> checks;
    const auto verdict = [&](const std::string& name, bool ok, const std::string& good,
                             const std::string& bad) {
        checks.push_back({name + ": " + (ok ? good : bad), ok});
    };

    const AntipodeReport rep = antipode(10);
    verdict("antipode axiom", rep.axiom_holds, "holds through weight 10",
            "fails through weight 10");
    verdict("signed closed form", rep.matches_signed_formula, "matches through weight 10",
            "differs somewhere through weight 10");
    verdict("unsigned closed form",
            rep.first_unsigned_mismatch && *rep.first_unsigned_mismatch == 1,
            "first differs at weight 1", "does not differ where expected");

    const SplittingTable wedge = mnt_splitting(p, cutoff);
    TruncatedSeries wedge_sum = TruncatedSeries::zero(cutoff);
    for (int i = 1; i <= p - 1; ++i)
        wedge_sum += wedge.wedge_at(i);
    const auto suspension = SpaceDescriptor::suspended_cp_infinity(cutoff).reduced_series();
    verdict("wedge summands partition the suspension", wedge_sum == suspension, "holds " + range,
            "fails " + range);

    const SplittingTable blocks = refined_splitting(p, cutoff);
    TruncatedSeries block_sum = TruncatedSeries::zero(cutoff);
    bool halves_ok = true;
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; j <= p - 1; ++j) {
            block_sum += blocks.block_at(i, j);
            halves_ok = halves_ok &&
                        add(blocks.symmetric_at(i, j), blocks.antisymmetric_at(i, j)) ==
                            blocks.block_at(i, j);
        }
    TruncatedSeries smash = TruncatedSeries::zero(cutoff);
    for (int a = 1; 2 * (a + 1) + 1 <= cutoff; ++a)
        for (int b = 1; 2 * (a + b) + 1 <= cutoff; ++b)
            smash.set_coeff(2 * (a + b) + 1, smash.coeff(2 * (a + b) + 1) + 1);
    verdict("refined blocks partition the smash", block_sum == smash, "holds " + range,
            "fails " + range);
    verdict("symmetric and antisymmetric halves fill each block", halves_ok, "holds " + range,
            "fails " + range);

    const GaneaReport ganea = ganea_loop_check(p, cutoff);
    verdict("loop factorization of the telescope", ganea.ok, "holds " + range,
            ganea.first_refined_mismatch
                ? "fails first at degree " + std::to_string(*ganea.first_refined_mismatch)
                : ganea.first_algebraic_mismatch
                      ? "fails first at degree " + std::to_string(*ganea.first_algebraic_mismatch)
                      : "fails " + range);

    const FactorizationReport fact = qsymm_factorization_report(p, cutoff);
    verdict("wedge-route factorization", fact.wedge_ok,
            "holds " + range + " (" + std::to_string(fact.wedge_summands) + " factors)",
            fact.first_wedge_mismatch
                ? "fails first at degree " + std::to_string(*fact.first_wedge_mismatch)
                : "fails " + range);
    verdict("refined-route factorization", fact.refined_ok,
            "holds " + range + " (" + std::to_string(fact.refined_summands) + " factors)",
            fact.first_refined_mismatch
                ? "fails first at degree " + std::to_string(*fact.first_refined_mismatch)
                : "fails " + range);
    verdict("refinement is strictly finer", fact.strictly_finer, "yes", "no");

    bool ok = true;
    for (const auto& check : checks)
        ok = ok && check.ok;
    if (o.format() == Format::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& check : checks)
            rows.push_back({{"line", check.line}, {"ok", check.ok}});
        emit_json({{"checks", std::move(rows)}, {"cutoff", cutoff}, {"ok", ok}, {"prime", p}});
        return ok ? 0 : 1;
    }
    const std::string prefix = o.format() == Format::tsv ? "# " : "";
    for (const auto& check : checks)
        std::cout << prefix << check.line << "\n";
    return ok ? 0 : 1;
}

/* ----------------------------------------------------------------- corpus */

int run_corpus_regen(const Options& o, const std::string& root)
{
    const int n = write_corpus(root);
    if (o.format() == Format::json)
        emit_json({{"fixtures", n}, {"root", root}});
    else if (!o.quiet)
        std::cout << "regenerated " << n << " fixtures under " << root << "\n";
    return 0;
}

int run_corpus_check(const Options& o, const std::string& root)
{
    const CorpusReport rep = check_corpus(root);
    const std::string verdict =
        rep.ok() ? "checked " + std::to_string(rep.fixtures_checked) +
                       " fixtures: golden files regenerate and main paths agree"
                 : "corpus check failed";
    if (o.format() == Format::json) {
        nlohmann::json input = nlohmann::json::array();
        for (const auto& issue : rep.input_issues)
            input.push_back({{"fixture", issue.fixture}, {"message", issue.message}});
        nlohmann::json mismatch = nlohmann::json::array();
        for (const auto& issue : rep.mismatch_issues)
            mismatch.push_back({{"fixture", issue.fixture}, {"message", issue.message}});
        emit_json({{"fixtures_checked", rep.fixtures_checked},
                   {"input_issues", std::move(input)},
                   {"mismatch_issues", std::move(mismatch)},
                   {"ok", rep.ok()},
                   {"verdict", verdict}});
    } else {
        const std::string prefix = o.format() == Format::tsv ? "# " : "";
        if (!o.quiet) {
            for (const auto& issue : rep.input_issues)
                std::cout << prefix << "input: " << issue.fixture << ": " << issue.message << "\n";
            for (const auto& issue : rep.mismatch_issues)
                std::cout << prefix << "mismatch: " << issue.fixture << ": " << issue.message
                          << "\n";
        }
        std::cout << prefix << verdict << "\n";
    }
    if (!rep.input_issues.empty())
        return 2;
    return rep.mismatch_issues.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    Options opts;
    int rc = 0;

    CLI::App app{"exact truncated-series toolkit for loop space decompositions"};
    app.require_subcommand(1);
    app.add_option("--prime", opts.prime, "odd prime for mod-p structure");
    app.add_option("--cutoff", opts.cutoff, "inclusive truncation degree");
    app.add_option("--maxlen", opts.maxlen, "maximum word or tensor length");
    auto* json_flag = app.add_flag("--json", opts.as_json, "emit JSON");
    auto* tsv_flag = app.add_flag("--tsv", opts.as_tsv, "emit TSV");
    json_flag->excludes(tsv_flag);
    tsv_flag->excludes(json_flag);
    app.add_flag("--quiet", opts.quiet, "suppress tables, keep verdicts");

    auto* series_cmd = app.add_subcommand("series", "truncated series utilities");
    series_cmd->fallthrough();
    series_cmd->require_subcommand(1);
    std::vector<std::string> mul_inputs;
    auto* series_mul = series_cmd->add_subcommand("mul", "multiply series files");
    series_mul->fallthrough();
    series_mul->add_option("--input", mul_inputs, "series JSON file, repeatable")->required();
    series_mul->callback([&] { rc = run_series_mul(opts, mul_inputs); });
    std::string invert_input;
    std::string invert_mode = "auto";
    auto* series_inv = series_cmd->add_subcommand("invert", "invert a series file");
    series_inv->fallthrough();
    series_inv->add_option("--input", invert_input, "series JSON file")->required();
    series_inv->add_option("--mode", invert_mode, "auto, geometric, or unit")
        ->check(CLI::IsMember({"auto", "geometric", "unit"}));
    series_inv->callback([&] { rc = run_series_invert(opts, invert_input, invert_mode); });
    std::string pow_input;
    int pow_exp = 0;
    auto* series_pow = series_cmd->add_subcommand("pow", "raise a series file to a power");
    series_pow->fallthrough();
    series_pow->add_option("--input", pow_input, "series JSON file")->required();
    series_pow->add_option("--exp", pow_exp, "exponent, >= 0")->required();
    series_pow->callback([&] { rc = run_series_pow(opts, pow_input, pow_exp); });

    int alphabet = 2;
    auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon word table with Witt counts");
    lyndon_cmd->fallthrough();
    lyndon_cmd->add_option("--alphabet", alphabet, "alphabet size")->required();
    lyndon_cmd->callback([&] { rc = run_lyndon(opts, alphabet); });

    auto* hm_cmd = app.add_subcommand("hm", "loop space decomposition of a wedge");
    hm_cmd->fallthrough();
    hm_cmd->require_subcommand(1);
    std::string hm_spaces;
    auto* hm_verify = hm_cmd->add_subcommand("verify", "check the loop series identity");
    hm_verify->fallthrough();
    hm_verify->add_option("--spaces", hm_spaces, "space file (JSON)")->required();
    hm_verify->callback([&] { rc = run_hm_verify(opts, hm_spaces); });
    std::string hm_factor_spaces;
    auto* hm_factors = hm_cmd->add_subcommand("factors", "list the decomposition factors");
    hm_factors->fallthrough();
    hm_factors->add_option("--spaces", hm_factor_spaces, "space file (JSON)")->required();
    hm_factors->callback([&] { rc = run_hm_factors(opts, hm_factor_spaces); });

    std::string porter_spaces;
    int porter_k = 1;
    auto* porter_cmd =
        app.add_subcommand("porter", "fiber of a coordinate subspace arrangement inclusion");
    porter_cmd->fallthrough();
    porter_cmd->add_option("--spaces", porter_spaces, "space file (JSON)")->required();
    porter_cmd->add_option("--k", porter_k, "arrangement rank, 1 <= k <= m")->required();
    porter_cmd->callback([&] { rc = run_porter(opts, porter_spaces, porter_k); });

    auto* subhopf_cmd = app.add_subcommand("subhopf", "coalgebra-split subalgebra analysis");
    subhopf_cmd->fallthrough();
    subhopf_cmd->require_subcommand(1);
    int dimv = 1;
    std::string family_spec = "lie";
    auto* subhopf_analyze = subhopf_cmd->add_subcommand("analyze", "series data of the subalgebra");
    subhopf_analyze->fallthrough();
    subhopf_analyze->add_option("--dimv", dimv, "number of generators")->required();
    subhopf_analyze->add_option("--family", family_spec,
                                "lie, full, or a JSON file of generators");
    subhopf_analyze->callback([&] { rc = run_subhopf(opts, dimv, family_spec); });

    auto* qsymm_cmd = app.add_subcommand("qsymm", "noncommutative symmetric function checks");
    qsymm_cmd->fallthrough();
    qsymm_cmd->require_subcommand(1);
    int max_weight = 1;
    auto* qsymm_antipode = qsymm_cmd->add_subcommand("antipode", "antipode table from the axiom");
    qsymm_antipode->fallthrough();
    qsymm_antipode->add_option("--maxweight", max_weight, "largest generator weight")->required();
    qsymm_antipode->callback([&] { rc = run_qsymm_antipode(opts, max_weight); });
    auto* qsymm_split = qsymm_cmd->add_subcommand("split", "residue splitting tables");
    qsymm_split->fallthrough();
    qsymm_split->callback([&] { rc = run_qsymm_split(opts, true); });
    auto* qsymm_verify = qsymm_cmd->add_subcommand("verify", "antipode, partition, and loop checks");
    qsymm_verify->fallthrough();
    qsymm_verify->callback([&] { rc = run_qsymm_verify(opts); });

    auto* corpus_cmd = app.add_subcommand("corpus", "golden fixture maintenance");
    corpus_cmd->fallthrough();
    corpus_cmd->require_subcommand(1);
    std::string regen_root = "fixtures";
    auto* corpus_regen = corpus_cmd->add_subcommand("regen", "rewrite fixtures from the oracles");
    corpus_regen->fallthrough();
    corpus_regen->add_option("--root", regen_root, "fixture directory");
    corpus_regen->callback([&] { rc = run_corpus_regen(opts, regen_root); });
    std::string check_root = "fixtures";
    auto* corpus_check = corpus_cmd->add_subcommand("check", "compare fixtures against the oracles");
    corpus_check->fallthrough();
    corpus_check->add_option("--root", check_root, "fixture directory");
    corpus_check->callback([&] { rc = run_corpus_check(opts, check_root); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const SpaceFileError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return rc;
}
