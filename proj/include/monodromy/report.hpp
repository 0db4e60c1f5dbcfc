/*
 * Run reports: which checks ran, which module operation produced each
 * verdict, input hashes, and a digest over the deterministic fields
 * (timing is reported but excluded from the digest).
 */

#pragma once

#include "monodromy/json_io.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace mlab {

inline std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view data)
{
    std::ostringstream os;
    os << std::hex << fnv1a64(data);
    return os.str();
}

struct CheckVerdict {
    std::string check;     // human-readable name
    std::string operation; // module operation that produced it
    bool ok = true;
    std::string witness;   // empty when ok
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs; // (path, content hash)
    std::vector<CheckVerdict> verdicts;
    double timing_ms = 0.0;

    bool all_ok() const
    {
        for (const auto& v : verdicts)
            if (!v.ok)
                return false;
        return true;
    }

    void add(const std::string& check, const std::string& operation, bool ok,
             const std::string& witness = "")
    {
        verdicts.push_back({check, operation, ok, witness});
    }

    void note_input(const std::string& path, const std::string& content)
    {
        inputs.emplace_back(path, fnv1a64_hex(content));
    }

    json deterministic_json() const
    {
        json j;
        j["command"] = command;
        json ins = json::array();
        for (const auto& [path, hash] : inputs)
            ins.push_back({{"path", path}, {"hash", hash}});
        j["inputs"] = std::move(ins);
        json vs = json::array();
        for (const auto& v : verdicts)
            vs.push_back({{"check", v.check},
                          {"operation", v.operation},
                          {"status", v.ok ? "ok" : "fail"},
                          {"witness", v.witness}});
        j["verdicts"] = std::move(vs);
        return j;
    }

    std::string digest() const { return fnv1a64_hex(canonical_dump(deterministic_json())); }

    json to_json() const
    {
        json j = deterministic_json();
        j["digest"] = digest();
        j["timing_ms"] = timing_ms; // excluded from the digest
        return j;
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << "== " << command << " ==\n";
        for (const auto& [path, hash] : inputs)
            os << "input " << path << " (fnv1a64 " << hash << ")\n";
        for (const auto& v : verdicts) {
            os << (v.ok ? "[ ok ] " : "[FAIL] ") << v.check << "  (" << v.operation << ")";
            if (!v.witness.empty())
                os << "\n       " << v.witness;
            os << "\n";
        }
        os << "digest " << digest() << ", " << timing_ms << " ms\n";
        return os.str();
    }
};

} // namespace mlab
