#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "due/hilbert.hpp"

namespace due {

/// Link with a triangular fundamental diagram. Canonical units: hours,
/// kilometres, vehicles.
struct Link {
    std::string id;
    std::size_t tail = 0;  ///< node index
    std::size_t head = 0;  ///< node index
    double length = 0.0;
    double free_speed = 0.0;      ///< v
    double wave_speed = 0.0;      ///< w (backward)
    double jam_density = 0.0;     ///< rho_jam
    double capacity = 0.0;        ///< C = v rho_c = w (rho_jam - rho_c)
    double critical_density = 0.0;

    double free_flow_time() const noexcept { return length / free_speed; }
    double backward_time() const noexcept { return length / wave_speed; }
    double storage() const noexcept { return jam_density * length; }
};

/// Builds a link from (v, w) and at least one of (rho_jam, C); the missing one
/// is derived and, when both are given, they are cross-checked to 1e-9
/// relative. Throws validation errors naming `where`.
Link make_link(std::string id, std::size_t tail, std::size_t head, double length, double free_speed,
               double wave_speed, std::optional<double> jam_density, std::optional<double> capacity,
               const std::string& where = {});

struct Node {
    std::string id;
    double x = 0.0;
    double y = 0.0;
};

enum class JunctionShape {
    isolated,  ///< no links
    source,    ///< only outgoing links
    sink,      ///< only incoming links
    through,   ///< 1 in, 1 out
    merge,     ///< m > 1 in, 1 out
    diverge,   ///< 1 in, n > 1 out
    general,   ///< m > 1, n > 1
};

std::string_view to_string(JunctionShape shape);

struct Junction {
    std::size_t node = 0;
    std::vector<std::size_t> incoming;
    std::vector<std::size_t> outgoing;
    bool is_origin = false;
    bool is_destination = false;
    JunctionShape shape = JunctionShape::isolated;

    bool is_ordinary() const noexcept { return !is_origin && !is_destination; }
};

struct OdPair {
    std::string id;
    std::size_t origin = 0;  ///< node index
    std::size_t destination = 0;
    double demand = 0.0;       ///< vehicles
    double target_time = 0.0;  ///< hours
};

struct Path {
    std::string id;
    std::size_t od = 0;
    std::vector<std::size_t> links;
};

struct Network {
    std::vector<Node> nodes;
    std::vector<Link> links;
    std::vector<OdPair> ods;
    std::vector<Path> paths;
    std::vector<Junction> junctions;  ///< one per node, filled by classify_junctions
    std::vector<std::vector<std::size_t>> paths_by_od;

    std::size_t node_index(const std::string& id) const;
    std::size_t link_index(const std::string& id) const;

    TripTable trip_table() const;
    FeasibleSet feasible_set() const;
    std::vector<std::size_t> od_of_path() const;

    /// Free-flow traversal time of every path (hours).
    std::vector<double> free_flow_times() const;
    double max_capacity() const;

    std::unordered_map<std::string, std::size_t> node_lookup;
    std::unordered_map<std::string, std::size_t> link_lookup;
};

struct NetworkFiles {
    std::filesystem::path nodes;
    std::filesystem::path links;
    std::filesystem::path ods;
    std::filesystem::path paths;

    /// nodes.csv, links.csv, od.csv, paths.csv inside `dir`.
    static NetworkFiles in_directory(const std::filesystem::path& dir);
};

/// Parses and validates an instance. Every failure names file and line.
Network load_network(const NetworkFiles& files);
Network load_network(const std::filesystem::path& dir);

/// Writes the four instance files in canonical units (hours, kilometres).
void write_network(const Network& net, const std::filesystem::path& dir);

/// Fills `net.junctions` (roles and shapes). Throws on an O-D pair whose
/// origin equals its destination.
void classify_junctions(Network& net);

/// Structural checks shared by load_network and `due validate`.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

std::vector<CheckResult> check_network(const Network& net);

}  // namespace due
