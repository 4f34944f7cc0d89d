#pragma once

#include "tnp/engine.hpp"
#include "tnp/faces.hpp"
#include "tnp/newton.hpp"
#include "tnp/oracle.hpp"
#include "tnp/tropical.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tnp {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "tnp/1";

/// Valuation of a series such as "3t^5", "-t^{-1/2} + 2t^3" or "(1+2i)t^4":
/// minus the smallest exponent with a nonzero coefficient. Imaginary parts are
/// dropped and noted in `notices`.
Rat series_valuation(std::string_view text, std::vector<std::string>& notices);

struct InputSpec {
  TropicalMap map;
  std::vector<std::string> notices;
  Json options;
};

/// Parses {"n": .., "maps": [[{"exp": [..], "val": "p/q"} | {"exp": [..], "series": ".."}, ..], ..]}.
/// Throws ParseError on malformed input and ConstantTermError on a term at the origin.
InputSpec parse_input(const Json& j);
InputSpec read_input_file(const std::string& path);

Json map_to_json(const TropicalMap& f);

Json polyhedron_to_json(const Polyhedron& p);
/// Rebuilds from the inequality description and checks it against the stored generators.
Polyhedron polyhedron_from_json(const Json& j);

struct PieceRecord {
  Polyhedron polytope;
  std::size_t face = 0;
  Vec witness;
  std::size_t cell = 0;
  std::string cell_label;
};

struct FaceRecord {
  std::size_t id = 0;
  Vec witness;
  std::vector<std::vector<Vec>> member_vertices;
  FaceFlags flags;
};

struct FanRecord {
  std::vector<std::size_t> face_vector;
  std::vector<Vec> facet_normals;
  std::vector<Vec> lineality;
  bool complete = true;
  std::string diagnostic;
};

struct OracleRecord {
  std::size_t points = 0;
  std::size_t members = 0;
  std::size_t mismatches = 0;
  std::size_t boundary_points = 0;
  std::size_t boundary_disagreements = 0;
};

/// Versioned result document.
struct OutputDoc {
  std::size_t n = 0;
  std::string assembly = "product";
  Json input;
  std::vector<PieceRecord> pieces;
  std::size_t raw_pieces = 0;
  std::vector<FaceRecord> faces;
  GenericityReport genericity;
  std::optional<FanRecord> fan;
  std::optional<OracleRecord> oracle;
};

OutputDoc make_output(const TropicalMap& f, const TNPSet& s, const std::vector<TupleFace>& faces,
                      const GenericityReport& genericity, Assembly assembly);
FanRecord fan_record(const RecoveredFan& fan);

Json to_json(const OutputDoc& doc);
OutputDoc output_from_json(const Json& j);

/// Pieces of an output document as polyhedra.
std::vector<Polyhedron> pieces_of(const OutputDoc& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tnp
