#include "corrlat/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace corrlat {

void Axis::validate() const {
    if (count < 1) throw ConfigError("axis '" + name + "': count must be >= 1");
    if (scale == Scale::Log && (!(start > 0.0) || !(stop > 0.0)))
        throw ConfigError("axis '" + name + "': log scale requires positive bounds");
}

double Axis::value(int i) const {
    if (count == 1) return start;
    const double t = static_cast<double>(i) / (count - 1);
    if (scale == Scale::Log) return start * std::pow(stop / start, t);
    return start + (stop - start) * t;
}

std::size_t SweepGrid::points() const {
    std::size_t n = 1;
    for (const Axis& a : axes) n *= static_cast<std::size_t>(a.count);
    return n;
}

std::vector<double> SweepGrid::coordinates(std::size_t point) const {
    std::vector<double> coords(axes.size());
    std::size_t rem = point;
    for (std::size_t k = axes.size(); k-- > 0;) {
        const std::size_t c = static_cast<std::size_t>(axes[k].count);
        coords[k] = axes[k].value(static_cast<int>(rem % c));
        rem /= c;
    }
    return coords;
}

double& SweepGrid::at(std::size_t point, std::size_t payload) {
    return values[point * payload_names.size() + payload];
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void SweepGrid::to_csv(std::ostream& out) const {
    for (const auto& [key, value] : meta) out << "# " << key << "=" << value << "\n";
    bool first = true;
    for (const Axis& a : axes) {
        out << (first ? "" : ",") << a.name;
        first = false;
    }
    for (const auto& p : payload_names) {
        out << (first ? "" : ",") << p;
        first = false;
    }
    out << "\n";
    const std::size_t stride = payload_names.size();
    for (std::size_t i = 0; i < points(); ++i) {
        const std::vector<double> coords = coordinates(i);
        first = true;
        for (double c : coords) {
            out << (first ? "" : ",") << format_double(c);
            first = false;
        }
        for (std::size_t j = 0; j < stride; ++j) {
            out << (first ? "" : ",") << format_double(values[i * stride + j]);
            first = false;
        }
        out << "\n";
    }
}

nlohmann::json SweepGrid::to_json() const {
    nlohmann::json doc;
    doc["meta"] = meta;
    doc["axes"] = nlohmann::json::array();
    for (const Axis& a : axes) {
        doc["axes"].push_back({{"name", a.name},
                               {"start", a.start},
                               {"stop", a.stop},
                               {"count", a.count},
                               {"scale", a.scale == Axis::Scale::Log ? "log" : "linear"}});
    }
    doc["payload_names"] = payload_names;
    doc["values"] = values;
    return doc;
}

SweepGrid SweepGrid::from_csv(std::istream& in) {
    SweepGrid grid;
    std::string line;
    std::vector<std::string> columns;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(2, eq - 2);
                grid.meta[key] = line.substr(eq + 1);
            }
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) columns.push_back(cell);
        break;
    }
    if (columns.empty()) throw ConfigError("SweepGrid::from_csv: missing header row");
    // Columns are re-ingested as payloads; axis structure is not recoverable
    // from a flat CSV and is left to the JSON format.
    grid.payload_names = columns;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t n = 0;
        while (std::getline(ss, cell, ',')) {
            grid.values.push_back(std::stod(cell));
            ++n;
        }
        if (n != columns.size())
            throw ConfigError("SweepGrid::from_csv: ragged row");
    }
    return grid;
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace corrlat
