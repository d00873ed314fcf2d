#pragma once

#include "toric/cohomology.hpp"
#include "toric/cone.hpp"
#include "toric/invariants.hpp"
#include "toric/quadrature.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace toric {

using Json = nlohmann::ordered_json;

/// Malformed input file content (exit code 4 at the CLI).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Missing or unreadable file (exit code 3 at the CLI).
class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form; NaN renders as "nan".
std::string format_double(double x);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Rational rational_from_json(const Json& value);

/// {"vertices": [["0","0"],["1","0"],...]} with rationals as "p/q" strings.
std::vector<Vec2q> vertices_from_json(const Json& doc);

/// {"rays": [[1,0],[0,1],...]}
NormalFan fan_from_json(const Json& doc);

/// {"lambda": ["1","1/2",...]}
VectorXq support_from_json(const Json& doc);

struct LatticeInput {
  LorentzLattice lattice;
  VectorXq omega;
};

/// {"gram": [[..],[..]], "c1": [..], "omega": [..], "reference": optional}
LatticeInput lattice_from_json(const Json& doc);

Json report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const Json& doc);
std::string report_to_text(const InvariantReport& report);

Json minimizer_to_json(const MinimizerResult& result);
std::string minimizer_to_text(const MinimizerResult& result);

Json verdict_to_json(const ObstructionVerdict& verdict);
std::string verdict_to_text(const ObstructionVerdict& verdict);

Json energy_to_json(const EnergyReport& report);
std::string energy_to_text(const EnergyReport& report);

std::string scan_to_csv(const std::vector<ScanRow>& rows);

} // namespace toric
