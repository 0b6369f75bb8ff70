#pragma once

#include <string>

#include <json.hpp>

#include "mms/curvature.hpp"
#include "mms/discretize.hpp"
#include "mms/distances.hpp"
#include "mms/nets.hpp"
#include "mms/regularity.hpp"
#include "mms/snowflake.hpp"
#include "mms/space.hpp"

namespace mms::io {

/// Points file: CSV with header x0,...,x{d-1}[,mass].
Space read_points_csv(const std::string& path, double metric_exponent = 2.0);

/// Graph file: {"vertices":[{"id":...,"mass":...}],"edges":[{"u":...,"v":...,"w":...}]}.
Space read_graph_json(const std::string& path);

/// Raw square CSV matrix with an optional companion mass CSV (one value
/// per line).
Space read_matrix_csv(const std::string& path, const std::string& mass_path = "",
                      double tol_tri = -1.0);

/// Raw matrix + masses without validation (for the validate command).
void read_raw_matrix(const std::string& path, std::vector<double>& dist, std::size_t& n);
std::vector<double> read_mass_csv(const std::string& path);

nlohmann::json net_to_json(const Space& space, const Net& net);
nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json regularity_to_json(const RegularityReport& rep);
nlohmann::json bg_to_json(const BGReport& rep);
nlohmann::json bounds_to_json(const BoundsReport& rep);
nlohmann::json distance_to_json(const DistanceResult& res);
nlohmann::json discretization_to_json(const Space& space, const Discretization& d);
nlohmann::json nerve_to_json(const NerveComplex& nc);

/// Quasimetric values as a CSV matrix plus a JSON sidecar {"s","K","variant"}.
void write_quasimetric_csv(const std::string& path, const QuasimetricMatrix& q);
nlohmann::json quasimetric_sidecar(const QuasimetricMatrix& q);

/// OFF-like text listing of a nerve complex for external viewers.
std::string nerve_to_off(const NerveComplex& nc);

/// Atomic write: temp file in the same directory, then rename.
void write_text_atomic(const std::string& path, const std::string& content);

void write_coords_csv(const std::string& path, const std::vector<std::vector<double>>& coords);

}  // namespace mms::io
