/*
 * Oracle moduli-count tables: mod-2 counts of holomorphic sections per
 * homotopy class, together with the energy data that drives the filtration.
 * Counts are inputs, never computed; everything the pipeline verifies is an
 * algebraic consequence of them.
 *
 * Admissible energy windows per direction (ε shared between g and g⁻¹):
 *
 *     g               [-(‖H‖₊ + ε),  ‖H‖₋ + ε]
 *     g_inverse       [-(‖H‖₋ + ε),  ‖H‖₊ + ε]
 *     glued           [-(‖H‖ + 2ε),  ‖H‖ + 2ε]
 *     cone_extension  [-(‖H‖₊ + ε),  ‖H‖₊ + ε]
 *
 * The lower bound is a hard invariant (a nonempty moduli space below it is
 * inconsistent data); energies above the upper bound are legal but fall
 * outside the defining sum of the map and are filtered at build time.
 */

#pragma once

#include "monodromy/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace mlab {

enum class TableDirection { g, g_inverse, glued, cone_extension };

inline std::string to_string(TableDirection d)
{
    switch (d) {
    case TableDirection::g: return "g";
    case TableDirection::g_inverse: return "g_inverse";
    case TableDirection::glued: return "glued";
    case TableDirection::cone_extension: return "cone_extension";
    }
    return "?";
}

inline TableDirection direction_from_string(const std::string& s)
{
    if (s == "g")
        return TableDirection::g;
    if (s == "g_inverse")
        return TableDirection::g_inverse;
    if (s == "glued")
        return TableDirection::glued;
    if (s == "cone_extension")
        return TableDirection::cone_extension;
    throw Error("unknown table direction '" + s + "'");
}

struct EnergyCaps {
    Rational h_plus{0};  // ‖H‖₊ = ∫ max H_t dt
    Rational h_minus{0}; // ‖H‖₋ = -∫ min H_t dt
    Rational epsilon{1, 100};

    Rational hofer_norm() const { return h_plus + h_minus; }
};

struct ModuliEntry {
    std::string source, target;
    std::string class_label;
    Rational energy{0};
    int count = 0; // mod 2

    bool operator==(const ModuliEntry&) const = default;
};

struct ModuliTable {
    TableDirection direction = TableDirection::g;
    EnergyCaps caps;
    std::vector<ModuliEntry> entries;
};

inline Rational window_lower(TableDirection d, const EnergyCaps& c)
{
    switch (d) {
    case TableDirection::g: return -(c.h_plus + c.epsilon);
    case TableDirection::g_inverse: return -(c.h_minus + c.epsilon);
    case TableDirection::glued: return -(c.h_plus + c.h_minus + 2 * c.epsilon);
    case TableDirection::cone_extension: return -(c.h_plus + c.epsilon);
    }
    throw Error("bad direction");
}

inline Rational window_upper(TableDirection d, const EnergyCaps& c)
{
    switch (d) {
    case TableDirection::g: return c.h_minus + c.epsilon;
    case TableDirection::g_inverse: return c.h_plus + c.epsilon;
    case TableDirection::glued: return c.h_plus + c.h_minus + 2 * c.epsilon;
    case TableDirection::cone_extension: return c.h_plus + c.epsilon;
    }
    throw Error("bad direction");
}

struct TableIssue {
    std::size_t entry_index = 0;
    std::string detail;
};

struct TableReport {
    bool ok = true;                   // no hard errors
    std::vector<TableIssue> errors;   // invariant violations, rejected
    std::vector<TableIssue> warnings; // above-cap entries, filtered at build
    std::vector<std::string> notes;
};

inline TableReport validate_table(const ModuliTable& t)
{
    TableReport report;
    report.notes.push_back("epsilon is shared between the g and g_inverse windows");
    if (t.caps.epsilon <= Rational(0))
        report.errors.push_back({0, "epsilon must be positive"});
    if (t.caps.h_plus < Rational(0) || t.caps.h_minus < Rational(0))
        report.errors.push_back({0, "one-sided norms must be non-negative"});

    std::map<std::string, Rational> label_energy;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> seen;
    Rational lo = window_lower(t.direction, t.caps);
    Rational hi = window_upper(t.direction, t.caps);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        const ModuliEntry& e = t.entries[i];
        if (e.count != 0 && e.count != 1)
            report.errors.push_back({i, "count must be 0 or 1 (mod-2 data)"});
        auto [it, fresh] = label_energy.emplace(e.class_label, e.energy);
        if (!fresh && it->second != e.energy)
            report.errors.push_back({i, "class '" + e.class_label +
                                            "' appears with two different energies (" +
                                            format_rational(it->second) + " vs " +
                                            format_rational(e.energy) + ")"});
        auto key = std::make_tuple(e.source, e.target, e.class_label);
        auto [sit, sfresh] = seen.emplace(key, i);
        if (!sfresh)
            report.errors.push_back({i, "duplicate entry (" + e.source + ", " + e.target + ", " +
                                            e.class_label + ")"});
        if (e.energy < lo)
            report.errors.push_back(
                {i, "energy " + format_rational(e.energy) + " of class '" + e.class_label +
                        "' violates the lower energy bound " + format_rational(lo) +
                        " (a nonempty moduli space cannot have such energy)"});
        else if (e.energy > hi)
            report.warnings.push_back({i, "energy " + format_rational(e.energy) + " of class '" +
                                              e.class_label + "' lies above the summation cap " +
                                              format_rational(hi) +
                                              "; the entry is filtered out of the map"});
    }
    report.ok = report.errors.empty();
    return report;
}

} // namespace mlab
