#ifndef CORRLAT_SWEEP_HPP
#define CORRLAT_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "corrlat/errors.hpp"

namespace corrlat {

/// One named sweep axis; count >= 1, scale linear or log.
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    enum class Scale { Linear, Log } scale = Scale::Linear;

    double value(int i) const;
    void validate() const;
};

/// Rectangular parameter grid with scalar payload columns, row-major over the
/// axes (last axis fastest). Serializable to CSV and JSON with provenance
/// metadata.
struct SweepGrid {
    std::vector<Axis> axes;
    std::vector<std::string> payload_names;
    std::vector<double> values; // points() * payload_names.size(), row-major
    std::map<std::string, std::string> meta; // scenario_hash, code_version, ...

    std::size_t points() const;
    std::vector<double> coordinates(std::size_t point) const;
    double& at(std::size_t point, std::size_t payload);

    void to_csv(std::ostream& out) const;
    nlohmann::json to_json() const;
    static SweepGrid from_csv(std::istream& in);
};

/// %.17g — fixed 17-significant-digit formatting; round-trips any double and
/// keeps golden files byte-stable.
std::string format_double(double v);

/// FNV-1a 64-bit, used for scenario hashes in output metadata.
std::uint64_t fnv1a(std::string_view data);

/// Runs fn(0..n-1) on `threads` workers; each index owns its output slot, so
/// results are identical for any thread count.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

} // namespace corrlat

#endif
