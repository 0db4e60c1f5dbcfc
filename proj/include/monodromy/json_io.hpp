/*
 * JSON formats for every artifact the tool exchanges. Serialization is
 * canonical (sorted keys, two-space indent, exponents and energies as
 * reduced "p/q" strings) so that files round-trip bit-exactly.
 */

#pragma once

#include "monodromy/hofer.hpp"
#include "monodromy/moduli.hpp"
#include "monodromy/morse.hpp"
#include "monodromy/wang.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace mlab {

using nlohmann::json;

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    out << canonical_dump(j);
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

inline json to_json(const F2Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.get(i, j) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline F2Matrix f2_matrix_from_json(const json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows)
        throw Error("matrix needs " + std::to_string(rows) + " rows");
    F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw Error("matrix row " + std::to_string(i) + " needs " + std::to_string(cols) +
                        " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            int v = row[c].get<int>();
            if (v != 0 && v != 1)
                throw Error("matrix entries must be 0 or 1");
            m.set(i, c, v);
        }
    }
    return m;
}

inline json to_json(const OmegaMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            json entry = json::array();
            for (const Rational& e : m.at(i, j).exponents())
                entry.push_back(format_rational(e));
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline OmegaMatrix omega_matrix_from_json(const json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows)
        throw Error("matrix needs " + std::to_string(rows) + " rows");
    OmegaMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw Error("matrix row " + std::to_string(i) + " needs " + std::to_string(cols) +
                        " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<Rational> exps;
            for (const auto& s : row[c])
                exps.push_back(parse_rational(s.get<std::string>()));
            m.at(i, c) = OmegaElement::from_exponents(std::move(exps));
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// chain complexes
// ---------------------------------------------------------------------------

namespace detail {

template <class M>
json complex_to_json(const BasicChainComplex<M>& c, const char* ring)
{
    json j;
    j["ring"] = ring;
    j["degrees"] = {{"min", c.min_degree()}, {"max", c.max_degree()}};
    json gens = json::object();
    json bnd = json::object();
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        gens[std::to_string(d)] = c.generators(d);
        if (d > c.min_degree())
            bnd[std::to_string(d)] = to_json(c.boundary(d));
    }
    j["generators"] = std::move(gens);
    j["boundary"] = std::move(bnd);
    return j;
}

template <class M, class FromJson>
BasicChainComplex<M> complex_from_json(const json& j, FromJson&& matrix_from)
{
    int lo = j.at("degrees").at("min").get<int>();
    int hi = j.at("degrees").at("max").get<int>();
    if (hi < lo)
        throw Error("degree range is empty");
    std::vector<std::vector<std::string>> gens;
    for (int d = lo; d <= hi; ++d)
        gens.push_back(j.at("generators").at(std::to_string(d)).get<std::vector<std::string>>());
    std::vector<M> bnd;
    for (int d = lo + 1; d <= hi; ++d)
        bnd.push_back(matrix_from(j.at("boundary").at(std::to_string(d)),
                                  gens[d - lo - 1].size(), gens[d - lo].size()));
    return BasicChainComplex<M>(lo, std::move(gens), std::move(bnd));
}

} // namespace detail

inline std::string ring_of(const json& j) { return j.at("ring").get<std::string>(); }

inline json to_json(const ChainComplex& c) { return detail::complex_to_json(c, "Z2"); }
inline json to_json(const OmegaChainComplex& c) { return detail::complex_to_json(c, "Omega"); }

inline ChainComplex chain_complex_from_json(const json& j)
{
    if (ring_of(j) != "Z2")
        throw Error("expected a Z2 complex");
    return detail::complex_from_json<F2Matrix>(j, f2_matrix_from_json);
}

inline OmegaChainComplex omega_complex_from_json(const json& j)
{
    if (ring_of(j) != "Omega")
        throw Error("expected an Omega complex");
    return detail::complex_from_json<OmegaMatrix>(j, omega_matrix_from_json);
}

// ---------------------------------------------------------------------------
// chain maps (Z2): {"degree_shift": s, "matrices": {"<d>": [[...]]}}
// ---------------------------------------------------------------------------

inline json to_json(const ChainMap& f)
{
    json j;
    j["degree_shift"] = f.degree_shift;
    json mats = json::object();
    for (int d = f.source.min_degree(); d <= f.source.max_degree(); ++d)
        mats[std::to_string(d)] = to_json(f.matrix_at(d));
    j["matrices"] = std::move(mats);
    return j;
}

inline ChainMap chain_map_from_json(const json& j, const ChainComplex& src,
                                    const ChainComplex& tgt)
{
    int shift = j.value("degree_shift", 0);
    std::vector<F2Matrix> mats;
    for (int d = src.min_degree(); d <= src.max_degree(); ++d) {
        const std::string key = std::to_string(d);
        if (j.at("matrices").contains(key))
            mats.push_back(
                f2_matrix_from_json(j.at("matrices").at(key), tgt.dim(d + shift), src.dim(d)));
        else
            mats.emplace_back(tgt.dim(d + shift), src.dim(d));
    }
    return ChainMap(src, tgt, shift, std::move(mats));
}

// ---------------------------------------------------------------------------
// cell complexes with matchings
// ---------------------------------------------------------------------------

inline json to_json(const MorseData& d)
{
    const CellComplex& cx = d.complex();
    json cells = json::object();
    for (int k = 0; k < cx.dimension_count(); ++k)
        cells[std::to_string(k)] = cx.labels(k);
    json incidence = json::array();
    for (const auto& [up, down] : cx.incidence_pairs())
        incidence.push_back(json::array({up, down}));
    json matching = json::array();
    for (const auto& p : d.matching())
        matching.push_back(json::array({p.lower, p.upper}));
    json j;
    j["cells"] = std::move(cells);
    j["incidence"] = std::move(incidence);
    j["matching"] = std::move(matching);
    return j;
}

inline MorseData morse_data_from_json(const json& j)
{
    std::vector<std::vector<std::string>> cells;
    const json& cj = j.at("cells");
    for (int d = 0;; ++d) {
        std::string key = std::to_string(d);
        if (!cj.contains(key))
            break;
        cells.push_back(cj.at(key).get<std::vector<std::string>>());
    }
    if (cells.empty())
        throw Error("cell complex needs a dimension-0 entry");
    std::vector<std::pair<std::string, std::string>> incidence;
    for (const auto& pair : j.at("incidence")) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error("incidence entries are (coface, face) pairs");
        incidence.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    std::vector<MatchingPair> matching;
    if (j.contains("matching"))
        for (const auto& pair : j.at("matching")) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error("matching entries are (lower, upper) pairs");
            matching.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
    return MorseData(CellComplex(std::move(cells), std::move(incidence)), std::move(matching));
}

// ---------------------------------------------------------------------------
// moduli tables
// ---------------------------------------------------------------------------

inline json to_json(const ModuliTable& t)
{
    json j;
    j["direction"] = to_string(t.direction);
    j["energy_caps"] = {{"H_plus", format_rational(t.caps.h_plus)},
                        {"H_minus", format_rational(t.caps.h_minus)},
                        {"epsilon", format_rational(t.caps.epsilon)}};
    json entries = json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"source", e.source},
                           {"target", e.target},
                           {"class", e.class_label},
                           {"energy", format_rational(e.energy)},
                           {"count", e.count}});
    j["entries"] = std::move(entries);
    return j;
}

inline ModuliTable moduli_table_from_json(const json& j)
{
    ModuliTable t;
    t.direction = direction_from_string(j.at("direction").get<std::string>());
    const json& caps = j.at("energy_caps");
    t.caps.h_plus = parse_rational(caps.at("H_plus").get<std::string>());
    t.caps.h_minus = parse_rational(caps.at("H_minus").get<std::string>());
    t.caps.epsilon = parse_rational(caps.at("epsilon").get<std::string>());
    for (const auto& e : j.at("entries"))
        t.entries.push_back({e.at("source").get<std::string>(), e.at("target").get<std::string>(),
                             e.at("class").get<std::string>(),
                             parse_rational(e.at("energy").get<std::string>()),
                             e.at("count").get<int>()});
    return t;
}

// ---------------------------------------------------------------------------
// sampled Hamiltonians; numbers are snapped, strings parsed exactly
// ---------------------------------------------------------------------------

inline Rational rational_from_json(const json& v, long long snap_denominator = 1000000)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number())
        return snap_to_rational(v.get<double>(), snap_denominator);
    throw Error("expected a number or a 'p/q' string");
}

inline json to_json(const SampledHamiltonian& h)
{
    json times = json::array();
    for (const auto& t : h.times)
        times.push_back(format_rational(t));
    json values = json::array();
    for (const auto& row : h.values) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(format_rational(v));
        values.push_back(std::move(r));
    }
    json j;
    j["times"] = std::move(times);
    j["values"] = std::move(values);
    return j;
}

inline SampledHamiltonian hamiltonian_from_json(const json& j,
                                                long long snap_denominator = 1000000)
{
    SampledHamiltonian h;
    for (const auto& t : j.at("times"))
        h.times.push_back(rational_from_json(t, snap_denominator));
    for (const auto& row : j.at("values")) {
        std::vector<Rational> r;
        for (const auto& v : row)
            r.push_back(rational_from_json(v, snap_denominator));
        h.values.push_back(std::move(r));
    }
    h.validate();
    return h;
}

// ---------------------------------------------------------------------------
// wang bundles and cycles
// ---------------------------------------------------------------------------

inline json to_json(const WangComplex& w)
{
    json j;
    j["minus"] = to_json(w.minus);
    j["plus"] = to_json(w.plus);
    j["phi"] = to_json(w.phi);
    j["phig"] = to_json(w.phi_g);
    return j;
}

inline WangComplex wang_bundle_from_json(const json& j)
{
    ChainComplex minus = chain_complex_from_json(j.at("minus"));
    ChainComplex plus = chain_complex_from_json(j.at("plus"));
    ChainMap phi = chain_map_from_json(j.at("phi"), plus, minus);
    ChainMap phi_g = chain_map_from_json(j.at("phig"), plus, minus);
    return build_wang(minus, plus, phi, phi_g);
}

struct CycleData {
    int degree = 0;
    std::vector<std::string> chain;
};

inline json to_json(const CycleData& c)
{
    return {{"degree", c.degree}, {"chain", c.chain}};
}

inline CycleData cycle_from_json(const json& j)
{
    return {j.at("degree").get<int>(), j.at("chain").get<std::vector<std::string>>()};
}

inline F2Vec chain_from_labels(const ChainComplex& c, int degree,
                               const std::vector<std::string>& labels)
{
    F2Vec v(c.dim(degree));
    for (const auto& l : labels) {
        auto idx = c.index_of(degree, l);
        if (!idx)
            throw Error("no generator '" + l + "' in degree " + std::to_string(degree));
        v.flip(*idx);
    }
    return v;
}

} // namespace mlab
