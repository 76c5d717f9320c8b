#pragma once

// JSON and CSV forms of sequences, words, traces and lattice data.
// Sequence files: {"weights": [2, 3], "classes": [[1, 0, 0, 0, 0], ...]}

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "wpl/mutation.hpp"

namespace wpl {

using Json = nlohmann::json;

/// Schema problem in an input document; the message names the first offending field.
class SchemaError : public MalformedInput {
public:
    using MalformedInput::MalformedInput;
};

Json sequence_to_json(const EulerLattice& lat, const ExcSeq& s);
/// "weights" is optional; when present it must match the lattice.
ExcSeq sequence_from_json(const EulerLattice& lat, const Json& j);

ExcSeq read_sequence(const EulerLattice& lat, const std::string& path);
void write_sequence(const EulerLattice& lat, const ExcSeq& s, const std::string& path);

Json class_to_json(const K0Class& a);
Json word_to_json(const BraidWord& w);
Json lattice_to_json(const EulerLattice& lat);
Json matrix_to_json(const IntMatrix& m);

/// One header row, then one row per mutation step.
void write_trace_csv(std::ostream& out, const std::vector<TraceStep>& trace);
Json trace_to_json(const std::vector<TraceStep>& trace);

/// Classes as space-separated coefficients joined by ';'.
std::string sequence_text(const ExcSeq& s);

} // namespace wpl
