/*
 * Graded chain complexes, chain maps, chain homotopies and mapping cones,
 * generic over the coefficient matrix type (Z2 bit matrices or T^λ-ring
 * matrices). Homology, induced maps and exactness checking live here too;
 * homology is computed over Z2 only, which is the only place the pipeline
 * ever needs it.
 *
 * Conventions:
 *   - boundary(d) maps degree d to degree d-1; rows are indexed by the
 *     (d-1)-generators and columns by the d-generators.
 *   - a chain map of degree_shift s sends degree d to degree d+s; its
 *     matrix at d has dim_target(d+s) rows and dim_source(d) columns.
 *   - Cone(f)_d = Target_d ⊕ Source_{d-1} with boundary
 *     (x, y) -> (∂x + f(y), ∂y).
 */

#pragma once

#include "monodromy/f2.hpp"
#include "monodromy/omega_matrix.hpp"

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace mlab {

namespace detail {

inline std::string entry_text(const F2Matrix& m, std::size_t i, std::size_t j)
{
    return m.get(i, j) ? "1" : "0";
}

inline std::string entry_text(const OmegaMatrix& m, std::size_t i, std::size_t j)
{
    return m.at(i, j).to_string();
}

inline bool entry_nonzero(const F2Matrix& m, std::size_t i, std::size_t j)
{
    return m.get(i, j);
}

inline bool entry_nonzero(const OmegaMatrix& m, std::size_t i, std::size_t j)
{
    return !m.at(i, j).is_zero();
}

} // namespace detail

struct ComplexViolation {
    int degree = 0;          // degree whose boundary breaks ∂∘∂ = 0
    std::string generator;   // offending generator in that degree
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::optional<ComplexViolation> violation;
};

template <class M>
class BasicChainComplex {
public:
    BasicChainComplex() = default;

    /// `boundaries[i]` is the boundary leaving degree min_degree + 1 + i;
    /// there is one fewer boundary than degrees.
    BasicChainComplex(int min_degree,
                      std::vector<std::vector<std::string>> generators,
                      std::vector<M> boundaries)
        : min_degree_(min_degree), generators_(std::move(generators))
    {
        if (generators_.empty())
            throw Error("chain complex needs at least one degree");
        if (boundaries.size() + 1 != generators_.size())
            throw Error("chain complex needs exactly one boundary per adjacent degree pair");
        boundary_.emplace_back(0, generators_[0].size());
        for (std::size_t i = 0; i < boundaries.size(); ++i) {
            const M& b = boundaries[i];
            if (b.rows() != generators_[i].size() || b.cols() != generators_[i + 1].size())
                throw Error("boundary at degree " + std::to_string(min_degree_ + 1 + (int)i) +
                            " has shape " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                            ", expected " + std::to_string(generators_[i].size()) + "x" +
                            std::to_string(generators_[i + 1].size()));
            boundary_.push_back(std::move(boundaries[i]));
        }
    }

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(generators_.size()) - 1; }
    bool has_degree(int d) const { return d >= min_degree() && d <= max_degree(); }

    std::size_t dim(int d) const
    {
        return has_degree(d) ? generators_[d - min_degree_].size() : 0;
    }

    const std::vector<std::string>& generators(int d) const
    {
        static const std::vector<std::string> empty;
        return has_degree(d) ? generators_[d - min_degree_] : empty;
    }

    std::optional<std::size_t> index_of(int d, const std::string& label) const
    {
        const auto& g = generators(d);
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] == label)
                return i;
        return std::nullopt;
    }

    /// Locate a label anywhere in the complex: (degree, index).
    std::optional<std::pair<int, std::size_t>> find_generator(const std::string& label) const
    {
        for (int d = min_degree(); d <= max_degree(); ++d)
            if (auto i = index_of(d, label))
                return std::make_pair(d, *i);
        return std::nullopt;
    }

    M boundary(int d) const
    {
        if (has_degree(d))
            return boundary_[d - min_degree_];
        return M(dim(d - 1), dim(d));
    }

    ValidationReport validate() const
    {
        for (int d = min_degree(); d < max_degree(); ++d) {
            M square = boundary(d) * boundary(d + 1);
            for (std::size_t j = 0; j < square.cols(); ++j)
                for (std::size_t i = 0; i < square.rows(); ++i)
                    if (detail::entry_nonzero(square, i, j)) {
                        ComplexViolation v;
                        v.degree = d + 1;
                        v.generator = generators(d + 1)[j];
                        v.detail = "boundary of boundary of '" + v.generator + "' (degree " +
                                   std::to_string(d + 1) + ") has component '" +
                                   generators(d - 1)[i] + "'";
                        return {false, v};
                    }
        }
        return {};
    }

    bool operator==(const BasicChainComplex& o) const = default;

private:
    int min_degree_ = 0;
    std::vector<std::vector<std::string>> generators_;
    std::vector<M> boundary_; // boundary_[i] leaves degree min_degree_ + i
};

using ChainComplex = BasicChainComplex<F2Matrix>;
using OmegaChainComplex = BasicChainComplex<OmegaMatrix>;

/// Extension of scalars: same generators, boundary embedded as the T^0 slice.
inline OmegaChainComplex tensor_with_omega(const ChainComplex& c)
{
    std::vector<std::vector<std::string>> gens;
    std::vector<OmegaMatrix> bnd;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        gens.push_back(c.generators(d));
        if (d > c.min_degree())
            bnd.push_back(OmegaMatrix::from_f2(c.boundary(d)));
    }
    return OmegaChainComplex(c.min_degree(), std::move(gens), std::move(bnd));
}

template <class M>
struct BasicChainMap {
    BasicChainComplex<M> source, target;
    int degree_shift = 0;
    std::vector<M> matrices; // matrices[i] acts on source degree source.min_degree() + i

    BasicChainMap() = default;
    BasicChainMap(BasicChainComplex<M> src, BasicChainComplex<M> tgt, int shift,
                  std::vector<M> mats)
        : source(std::move(src)), target(std::move(tgt)), degree_shift(shift),
          matrices(std::move(mats))
    {
        std::size_t degrees = source.max_degree() - source.min_degree() + 1;
        if (matrices.size() != degrees)
            throw Error("chain map needs one matrix per source degree");
        for (std::size_t i = 0; i < degrees; ++i) {
            int d = source.min_degree() + static_cast<int>(i);
            if (matrices[i].rows() != target.dim(d + degree_shift) ||
                matrices[i].cols() != source.dim(d))
                throw Error("chain map matrix at degree " + std::to_string(d) + " has shape " +
                            std::to_string(matrices[i].rows()) + "x" +
                            std::to_string(matrices[i].cols()) + ", expected " +
                            std::to_string(target.dim(d + degree_shift)) + "x" +
                            std::to_string(source.dim(d)));
        }
    }

    M matrix_at(int d) const
    {
        if (d >= source.min_degree() && d <= source.max_degree())
            return matrices[d - source.min_degree()];
        return M(target.dim(d + degree_shift), source.dim(d));
    }

    static BasicChainMap identity(const BasicChainComplex<M>& c)
    {
        std::vector<M> mats;
        for (int d = c.min_degree(); d <= c.max_degree(); ++d)
            mats.push_back(M::identity(c.dim(d)));
        return BasicChainMap(c, c, 0, std::move(mats));
    }

    static BasicChainMap zero(const BasicChainComplex<M>& src, const BasicChainComplex<M>& tgt,
                              int shift = 0)
    {
        std::vector<M> mats;
        for (int d = src.min_degree(); d <= src.max_degree(); ++d)
            mats.emplace_back(tgt.dim(d + shift), src.dim(d));
        return BasicChainMap(src, tgt, shift, std::move(mats));
    }

    bool operator==(const BasicChainMap& o) const = default;
};

using ChainMap = BasicChainMap<F2Matrix>;
using OmegaChainMap = BasicChainMap<OmegaMatrix>;

template <class M>
struct BasicChainHomotopy {
    BasicChainComplex<M> source, target;
    std::vector<M> matrices; // degree +1 maps, indexed like BasicChainMap

    BasicChainHomotopy() = default;
    BasicChainHomotopy(BasicChainComplex<M> src, BasicChainComplex<M> tgt, std::vector<M> mats)
        : source(std::move(src)), target(std::move(tgt)), matrices(std::move(mats))
    {
        std::size_t degrees = source.max_degree() - source.min_degree() + 1;
        if (matrices.size() != degrees)
            throw Error("chain homotopy needs one matrix per source degree");
        for (std::size_t i = 0; i < degrees; ++i) {
            int d = source.min_degree() + static_cast<int>(i);
            if (matrices[i].rows() != target.dim(d + 1) || matrices[i].cols() != source.dim(d))
                throw Error("chain homotopy matrix at degree " + std::to_string(d) +
                            " is not a degree +1 map");
        }
    }

    static BasicChainHomotopy zero(const BasicChainComplex<M>& src,
                                   const BasicChainComplex<M>& tgt)
    {
        std::vector<M> mats;
        for (int d = src.min_degree(); d <= src.max_degree(); ++d)
            mats.emplace_back(tgt.dim(d + 1), src.dim(d));
        return BasicChainHomotopy(src, tgt, std::move(mats));
    }

    M matrix_at(int d) const
    {
        if (d >= source.min_degree() && d <= source.max_degree())
            return matrices[d - source.min_degree()];
        return M(target.dim(d + 1), source.dim(d));
    }
};

using ChainHomotopy = BasicChainHomotopy<F2Matrix>;
using OmegaChainHomotopy = BasicChainHomotopy<OmegaMatrix>;

struct ChainMapReport {
    bool ok = true;
    int degree = 0;
    std::size_t row = 0, col = 0;
    std::string detail;
};

/// Verify ∂∘f = f∘∂ degree by degree; reports the first failing square.
template <class M>
ChainMapReport is_chain_map(const BasicChainMap<M>& f)
{
    for (int d = f.source.min_degree(); d <= f.source.max_degree(); ++d) {
        M lhs = f.target.boundary(d + f.degree_shift) * f.matrix_at(d);
        M rhs = f.matrix_at(d - 1) * f.source.boundary(d);
        M diff = lhs + rhs;
        for (std::size_t j = 0; j < diff.cols(); ++j)
            for (std::size_t i = 0; i < diff.rows(); ++i)
                if (detail::entry_nonzero(diff, i, j)) {
                    ChainMapReport r;
                    r.ok = false;
                    r.degree = d;
                    r.row = i;
                    r.col = j;
                    r.detail = "∂f + f∂ is nonzero at degree " + std::to_string(d) +
                               ", generator '" + f.source.generators(d)[j] + "' -> '" +
                               f.target.generators(d + f.degree_shift - 1)[i] +
                               "' (entry " + detail::entry_text(diff, i, j) + ")";
                    return r;
                }
    }
    return {};
}

/// f ∘ g (apply g first).
template <class M>
BasicChainMap<M> compose(const BasicChainMap<M>& f, const BasicChainMap<M>& g)
{
    if (!(g.target == f.source))
        throw Error("compose: inner map target differs from outer map source");
    std::vector<M> mats;
    for (int d = g.source.min_degree(); d <= g.source.max_degree(); ++d)
        mats.push_back(f.matrix_at(d + g.degree_shift) * g.matrix_at(d));
    return BasicChainMap<M>(g.source, f.target, f.degree_shift + g.degree_shift,
                            std::move(mats));
}

template <class M>
BasicChainMap<M> add(const BasicChainMap<M>& f, const BasicChainMap<M>& g)
{
    if (!(f.source == g.source) || !(f.target == g.target) || f.degree_shift != g.degree_shift)
        throw Error("add: chain maps are not parallel");
    std::vector<M> mats;
    for (std::size_t i = 0; i < f.matrices.size(); ++i)
        mats.push_back(f.matrices[i] + g.matrices[i]);
    return BasicChainMap<M>(f.source, f.target, f.degree_shift, std::move(mats));
}

/// Cone_d = Target_d ⊕ Source_{d-1}; generators carry "t/" and "s/" prefixes.
template <class M>
BasicChainComplex<M> mapping_cone(const BasicChainMap<M>& f)
{
    if (f.degree_shift != 0)
        throw Error("mapping cone needs a degree-preserving map");
    const auto& S = f.source;
    const auto& T = f.target;
    int lo = std::min(T.min_degree(), S.min_degree() + 1);
    int hi = std::max(T.max_degree(), S.max_degree() + 1);

    std::vector<std::vector<std::string>> gens;
    for (int d = lo; d <= hi; ++d) {
        std::vector<std::string> g;
        for (const auto& l : T.generators(d))
            g.push_back("t/" + l);
        for (const auto& l : S.generators(d - 1))
            g.push_back("s/" + l);
        gens.push_back(std::move(g));
    }

    std::vector<M> bnd;
    for (int d = lo + 1; d <= hi; ++d) {
        std::size_t rt = T.dim(d - 1), rs = S.dim(d - 2);
        std::size_t ct = T.dim(d), cs = S.dim(d - 1);
        M b(rt + rs, ct + cs);
        M bt = T.boundary(d);
        for (std::size_t i = 0; i < rt; ++i)
            for (std::size_t j = 0; j < ct; ++j)
                if (detail::entry_nonzero(bt, i, j))
                    assign_entry(b, i, j, bt);
        M fm = f.matrix_at(d - 1);
        for (std::size_t i = 0; i < rt; ++i)
            for (std::size_t j = 0; j < cs; ++j)
                if (detail::entry_nonzero(fm, i, j))
                    assign_entry(b, i, ct + j, fm, i, j);
        M bs = S.boundary(d - 1);
        for (std::size_t i = 0; i < rs; ++i)
            for (std::size_t j = 0; j < cs; ++j)
                if (detail::entry_nonzero(bs, i, j))
                    assign_entry(b, rt + i, ct + j, bs, i, j);
        bnd.push_back(std::move(b));
    }
    return BasicChainComplex<M>(lo, std::move(gens), std::move(bnd));
}

namespace detail {
inline void copy_entry(F2Matrix& dst, std::size_t di, std::size_t dj, const F2Matrix& src,
                       std::size_t si, std::size_t sj)
{
    dst.set(di, dj, src.get(si, sj));
}
inline void copy_entry(OmegaMatrix& dst, std::size_t di, std::size_t dj, const OmegaMatrix& src,
                       std::size_t si, std::size_t sj)
{
    dst.at(di, dj) = src.at(si, sj);
}
} // namespace detail

template <class M>
void assign_entry(M& dst, std::size_t di, std::size_t dj, const M& src)
{
    detail::copy_entry(dst, di, dj, src, di, dj);
}

template <class M>
void assign_entry(M& dst, std::size_t di, std::size_t dj, const M& src, std::size_t si,
                  std::size_t sj)
{
    detail::copy_entry(dst, di, dj, src, si, sj);
}

/// x -> (x, 0), the inclusion of the target into the cone.
template <class M>
BasicChainMap<M> cone_inclusion(const BasicChainMap<M>& f, const BasicChainComplex<M>& cone)
{
    std::vector<M> mats;
    for (int d = f.target.min_degree(); d <= f.target.max_degree(); ++d) {
        M m(cone.dim(d), f.target.dim(d));
        M id = M::identity(f.target.dim(d));
        for (std::size_t i = 0; i < f.target.dim(d); ++i)
            detail::copy_entry(m, i, i, id, i, i);
        mats.push_back(std::move(m));
    }
    return BasicChainMap<M>(f.target, cone, 0, std::move(mats));
}

/// (x, y) -> y, the degree -1 projection of the cone onto the source.
template <class M>
BasicChainMap<M> cone_projection(const BasicChainMap<M>& f, const BasicChainComplex<M>& cone)
{
    std::vector<M> mats;
    for (int d = cone.min_degree(); d <= cone.max_degree(); ++d) {
        std::size_t offset = f.target.dim(d);
        M m(f.source.dim(d - 1), cone.dim(d));
        M id = M::identity(f.source.dim(d - 1));
        for (std::size_t i = 0; i < f.source.dim(d - 1); ++i)
            detail::copy_entry(m, i, offset + i, id, i, i);
        mats.push_back(std::move(m));
    }
    return BasicChainMap<M>(cone, f.source, -1, std::move(mats));
}

enum class Projection { none, pi_plus_pi_minus };

struct HomotopyIdentityReport {
    bool ok = true;
    int degree = 0;
    std::size_t row = 0, col = 0;
    std::string entry;
    std::string detail;
};

/*
 * Evaluate (Σ maps) + h∂ + ∂h and confirm it is the zero map. With
 * Projection::pi_plus_pi_minus the operator Π+ (…) Π- is tested instead;
 * since Π- passes T^0 through and the projections act coefficientwise,
 * that operator vanishes exactly when every entry of the sum has Π+ = 0,
 * so the check is entrywise.
 */
template <class M>
HomotopyIdentityReport check_homotopy_identity(const std::vector<BasicChainMap<M>>& maps,
                                               const BasicChainHomotopy<M>& h,
                                               Projection project = Projection::none)
{
    const BasicChainComplex<M>& src = h.source;
    const BasicChainComplex<M>& tgt = h.target;
    for (const auto& m : maps) {
        if (!(m.source == src) || !(m.target == tgt) || m.degree_shift != 0)
            throw Error("homotopy identity: all maps must be parallel endomorphism-shaped maps");
    }
    for (int d = src.min_degree(); d <= src.max_degree(); ++d) {
        M sum(tgt.dim(d), src.dim(d));
        for (const auto& m : maps)
            sum = sum + m.matrix_at(d);
        sum = sum + tgt.boundary(d + 1) * h.matrix_at(d);
        sum = sum + h.matrix_at(d - 1) * src.boundary(d);
        if (project == Projection::pi_plus_pi_minus) {
            if constexpr (std::is_same_v<M, OmegaMatrix>)
                sum = sum.proj_nonneg();
            else
                throw Error("Π+/Π- projection requires ring Omega");
        }
        for (std::size_t j = 0; j < sum.cols(); ++j)
            for (std::size_t i = 0; i < sum.rows(); ++i)
                if (detail::entry_nonzero(sum, i, j)) {
                    HomotopyIdentityReport r;
                    r.ok = false;
                    r.degree = d;
                    r.row = i;
                    r.col = j;
                    r.entry = detail::entry_text(sum, i, j);
                    r.detail = "identity fails at degree " + std::to_string(d) + ", '" +
                               src.generators(d)[j] + "' -> '" + tgt.generators(d)[i] +
                               "': " + r.entry;
                    return r;
                }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Homology over Z2.
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> homology_dims(const ChainComplex& c)
{
    auto v = c.validate();
    if (!v.ok)
        throw Error("homology of an invalid complex: " + v.violation->detail);
    std::vector<std::size_t> dims;
    for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
        std::size_t cycles = c.dim(d) - c.boundary(d).rank();
        std::size_t boundaries = c.boundary(d + 1).rank();
        dims.push_back(cycles - boundaries);
    }
    return dims;
}

/// Homology with chosen cycle representatives, supporting induced maps.
class Homology {
public:
    explicit Homology(const ChainComplex& c) : complex_(c)
    {
        auto v = c.validate();
        if (!v.ok)
            throw Error("homology of an invalid complex: " + v.violation->detail);
        for (int d = c.min_degree(); d <= c.max_degree(); ++d) {
            Level lvl;
            lvl.boundaries = column_space_basis(c.boundary(d + 1));
            F2Span span(c.dim(d));
            for (const auto& b : lvl.boundaries)
                span.insert(b);
            for (auto& z : c.boundary(d).kernel_basis())
                if (span.insert(z))
                    lvl.reps.push_back(std::move(z));
            levels_.push_back(std::move(lvl));
        }
    }

    const ChainComplex& complex() const { return complex_; }

    std::size_t dim(int degree) const
    {
        return in_range(degree) ? levels_[degree - complex_.min_degree()].reps.size() : 0;
    }

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> out;
        for (const auto& l : levels_)
            out.push_back(l.reps.size());
        return out;
    }

    const std::vector<F2Vec>& representatives(int degree) const
    {
        static const std::vector<F2Vec> empty;
        return in_range(degree) ? levels_[degree - complex_.min_degree()].reps : empty;
    }

    bool is_cycle(int degree, const F2Vec& v) const
    {
        return complex_.boundary(degree).mul_vec(v).is_zero();
    }

    bool is_boundary(int degree, const F2Vec& v) const
    {
        return complex_.boundary(degree + 1).solve(v).has_value();
    }

    /// Coordinates of a cycle's class in the representative basis.
    F2Vec class_coordinates(int degree, const F2Vec& cycle) const
    {
        if (!is_cycle(degree, cycle))
            throw Error("class_coordinates: chain is not a cycle");
        if (!in_range(degree)) {
            if (!cycle.is_zero())
                throw Error("class_coordinates: nonzero chain outside degree range");
            return F2Vec(0);
        }
        const Level& lvl = levels_[degree - complex_.min_degree()];
        std::vector<F2Vec> cols = lvl.boundaries;
        cols.insert(cols.end(), lvl.reps.begin(), lvl.reps.end());
        F2Matrix a = matrix_from_columns(complex_.dim(degree), cols);
        auto x = a.solve(cycle);
        if (!x)
            throw Error("class_coordinates: cycle not in the cycle space (corrupt complex?)");
        F2Vec coords(lvl.reps.size());
        for (std::size_t i = 0; i < lvl.reps.size(); ++i)
            coords.set(i, x->get(lvl.boundaries.size() + i));
        return coords;
    }

    /// Chain representative of a class given by coordinates.
    F2Vec chain_of(int degree, const F2Vec& coords) const
    {
        F2Vec out(complex_.dim(degree));
        const auto& reps = representatives(degree);
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (coords.get(i))
                out ^= reps[i];
        return out;
    }

private:
    bool in_range(int d) const { return d >= complex_.min_degree() && d <= complex_.max_degree(); }

    struct Level {
        std::vector<F2Vec> boundaries;
        std::vector<F2Vec> reps;
    };

    ChainComplex complex_;
    std::vector<Level> levels_;
};

/// Matrix of f_* : H_degree(source) -> H_{degree+shift}(target).
inline F2Matrix induced_matrix(const ChainMap& f, const Homology& hsrc, const Homology& htgt,
                               int degree)
{
    const auto& reps = hsrc.representatives(degree);
    F2Matrix out(htgt.dim(degree + f.degree_shift), reps.size());
    F2Matrix fm = f.matrix_at(degree);
    for (std::size_t j = 0; j < reps.size(); ++j) {
        F2Vec image = fm.mul_vec(reps[j]);
        out.set_column(j, htgt.class_coordinates(degree + f.degree_shift, image));
    }
    return out;
}

struct ExactnessReport {
    bool ok = true;
    int degree = 0;
    std::string detail;
};

namespace detail {

/// Exactness at the middle homology: im(m_in) == ker(m_out).
inline bool exact_at(const F2Matrix& m_in, const F2Matrix& m_out)
{
    if (!(m_out * m_in).is_zero())
        return false;
    return m_in.rank() == m_in.rows() - m_out.rank();
}

} // namespace detail

/// im(f_*) = ker(g_*) in every degree of the middle complex.
inline ExactnessReport check_exactness(const ChainMap& f, const ChainMap& g)
{
    if (!(f.target == g.source))
        throw Error("check_exactness: maps are not composable");
    Homology ha(f.source), hb(f.target), hc(g.target);
    for (int d = f.target.min_degree(); d <= f.target.max_degree(); ++d) {
        F2Matrix m_in = induced_matrix(f, ha, hb, d - f.degree_shift);
        F2Matrix m_out = induced_matrix(g, hb, hc, d);
        if (!detail::exact_at(m_in, m_out)) {
            ExactnessReport r;
            r.ok = false;
            r.degree = d;
            r.detail = "im != ker at homology degree " + std::to_string(d);
            return r;
        }
    }
    return {};
}

/// Render a chain as a sum of generator labels.
inline std::string chain_to_string(const ChainComplex& c, int degree, const F2Vec& v)
{
    std::string s;
    const auto& gens = c.generators(degree);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) {
            if (!s.empty())
                s += " + ";
            s += gens[i];
        }
    return s.empty() ? "0" : s;
}

} // namespace mlab
