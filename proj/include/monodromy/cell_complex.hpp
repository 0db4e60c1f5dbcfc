/*
 * Finite cell complexes with mod-2 incidence. A cell's boundary is the set
 * of codimension-1 faces with odd incidence number; ∂∘∂ = 0 is enforced at
 * construction, so every instance yields a valid cellular chain complex.
 */

#pragma once

#include "monodromy/chain_complex.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mlab {

class CellComplex {
public:
    CellComplex() = default;

    /// `cells[d]` lists the d-cell labels; incidence pairs are (coface, face).
    CellComplex(std::vector<std::vector<std::string>> cells,
                std::vector<std::pair<std::string, std::string>> incidence)
        : cells_(std::move(cells)), incidence_pairs_(std::move(incidence))
    {
        if (cells_.empty())
            throw Error("cell complex needs at least one dimension");
        for (int d = 0; d < dimension_count(); ++d)
            for (std::size_t i = 0; i < cells_[d].size(); ++i) {
                auto [it, fresh] = lookup_.emplace(cells_[d][i], Cell{d, i});
                if (!fresh)
                    throw Error("duplicate cell label '" + cells_[d][i] + "'");
            }
        faces_.resize(cells_.size());
        for (int d = 0; d < dimension_count(); ++d)
            faces_[d].resize(cells_[d].size());
        for (const auto& [coface, face] : incidence_pairs_) {
            Cell up = cell(coface);
            Cell down = cell(face);
            if (up.dim != down.dim + 1)
                throw Error("incidence between '" + coface + "' and '" + face +
                            "' is not between adjacent dimensions");
            auto& f = faces_[up.dim][up.index];
            if (std::find(f.begin(), f.end(), down.index) != f.end())
                throw Error("duplicate incidence pair ('" + coface + "', '" + face + "')");
            f.push_back(down.index);
        }
        for (auto& per_dim : faces_)
            for (auto& f : per_dim)
                std::sort(f.begin(), f.end());

        chain_ = build_chain_complex();
        auto report = chain_.validate();
        if (!report.ok)
            throw Error("cellular boundary fails ∂∘∂ = 0: " + report.violation->detail);
    }

    struct Cell {
        int dim = 0;
        std::size_t index = 0;
        bool operator==(const Cell&) const = default;
    };

    int dimension_count() const { return static_cast<int>(cells_.size()); }
    int top_dimension() const { return dimension_count() - 1; }

    std::size_t count(int dim) const
    {
        return dim >= 0 && dim < dimension_count() ? cells_[dim].size() : 0;
    }

    std::size_t total_cells() const
    {
        std::size_t n = 0;
        for (const auto& c : cells_)
            n += c.size();
        return n;
    }

    const std::string& label(const Cell& c) const { return cells_[c.dim][c.index]; }
    const std::vector<std::string>& labels(int dim) const { return cells_[dim]; }

    bool has_cell(const std::string& label) const { return lookup_.count(label) > 0; }

    Cell cell(const std::string& label) const
    {
        auto it = lookup_.find(label);
        if (it == lookup_.end())
            throw Error("unknown cell '" + label + "'");
        return it->second;
    }

    /// Indices (in dimension dim-1) of the odd-incidence faces of a cell.
    const std::vector<std::size_t>& faces(const Cell& c) const { return faces_[c.dim][c.index]; }

    bool is_face(const Cell& lower, const Cell& upper) const
    {
        if (upper.dim != lower.dim + 1)
            return false;
        const auto& f = faces(upper);
        return std::binary_search(f.begin(), f.end(), lower.index);
    }

    const ChainComplex& chain_complex() const { return chain_; }

    const std::vector<std::pair<std::string, std::string>>& incidence_pairs() const
    {
        return incidence_pairs_;
    }

    bool operator==(const CellComplex& o) const
    {
        return cells_ == o.cells_ && faces_ == o.faces_;
    }

private:
    ChainComplex build_chain_complex() const
    {
        std::vector<F2Matrix> boundaries;
        for (int d = 1; d < dimension_count(); ++d) {
            F2Matrix b(count(d - 1), count(d));
            for (std::size_t j = 0; j < count(d); ++j)
                for (std::size_t i : faces_[d][j])
                    b.set(i, j, true);
            boundaries.push_back(std::move(b));
        }
        return ChainComplex(0, cells_, std::move(boundaries));
    }

    std::vector<std::vector<std::string>> cells_;
    std::vector<std::pair<std::string, std::string>> incidence_pairs_;
    std::map<std::string, Cell> lookup_;
    std::vector<std::vector<std::vector<std::size_t>>> faces_; // [dim][cell] -> face indices
    ChainComplex chain_;
};

} // namespace mlab
