#include "wpl/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace wpl {

Json class_to_json(const K0Class& a) { return Json(a.coeffs()); }

Json sequence_to_json(const EulerLattice& lat, const ExcSeq& s) {
    Json classes = Json::array();
    for (const auto& e : s.entries) classes.push_back(class_to_json(e));
    return Json{{"weights", lat.weights().weights()}, {"classes", classes}};
}

ExcSeq sequence_from_json(const EulerLattice& lat, const Json& j) {
    if (!j.is_object()) throw SchemaError("document: expected an object");
    if (j.contains("weights")) {
        const Json& w = j["weights"];
        if (!w.is_array()) throw SchemaError("weights: expected an array of integers");
        std::vector<Int> ws;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (!w[k].is_number_integer()) throw SchemaError("weights[" + std::to_string(k) + "]: expected an integer");
            ws.push_back(w[k].get<Int>());
        }
        if (ws != lat.weights().weights())
            throw SchemaError("weights: file has (" + WeightType(ws).to_string() + "), expected (" +
                              lat.weights().to_string() + ")");
    }
    if (!j.contains("classes")) throw SchemaError("classes: missing");
    const Json& cs = j["classes"];
    if (!cs.is_array()) throw SchemaError("classes: expected an array");
    ExcSeq s;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string where = "classes[" + std::to_string(k) + "]";
        if (!cs[k].is_array()) throw SchemaError(where + ": expected an array");
        if (cs[k].size() != lat.rank())
            throw SchemaError(where + ": expected " + std::to_string(lat.rank()) + " coefficients, got " +
                              std::to_string(cs[k].size()));
        std::vector<Int> v;
        for (std::size_t r = 0; r < cs[k].size(); ++r) {
            if (!cs[k][r].is_number_integer())
                throw SchemaError(where + "[" + std::to_string(r) + "]: expected an integer");
            v.push_back(cs[k][r].get<Int>());
        }
        s.entries.emplace_back(std::move(v));
    }
    return s;
}

ExcSeq read_sequence(const EulerLattice& lat, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return sequence_from_json(lat, j);
}

void write_sequence(const EulerLattice& lat, const ExcSeq& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write " + path);
    out << sequence_to_json(lat, s).dump(2) << '\n';
}

Json word_to_json(const BraidWord& w) { return Json(w.letters); }

Json matrix_to_json(const IntMatrix& m) { return Json(m.to_rows()); }

Json lattice_to_json(const EulerLattice& lat) {
    Json twists = Json::array();
    for (std::size_t k = 0; k < lat.rank(); ++k) twists.push_back(format_lvec(lat.basis_twist(k)));
    return Json{{"weights", lat.weights().weights()},
                {"n", lat.rank()},
                {"p", lat.lcm()},
                {"gram", matrix_to_json(lat.gram())},
                {"deg", lat.degree_vector()},
                {"omega_matrix", matrix_to_json(lat.omega_matrix())},
                {"genus2", lat.genus2()},
                {"basis", twists}};
}

std::string sequence_text(const ExcSeq& s) {
    std::ostringstream os;
    for (std::size_t k = 0; k < s.size(); ++k) {
        os << (k ? ";" : "");
        for (std::size_t r = 0; r < s[k].size(); ++r) os << (r ? " " : "") << s[k][r];
    }
    return os.str();
}

void write_trace_csv(std::ostream& out, const std::vector<TraceStep>& trace) {
    out << "step,letter,mutation,sequence\n";
    for (std::size_t k = 0; k < trace.size(); ++k)
        out << k + 1 << ',' << trace[k].letter << ',' << to_string(trace[k].mutation) << ',' << sequence_text(trace[k].result)
            << '\n';
}

Json trace_to_json(const std::vector<TraceStep>& trace) {
    Json out = Json::array();
    for (std::size_t k = 0; k < trace.size(); ++k) {
        Json cls = Json::array();
        for (const auto& e : trace[k].result.entries) cls.push_back(class_to_json(e));
        out.push_back(Json{{"step", k + 1}, {"letter", trace[k].letter}, {"mutation", to_string(trace[k].mutation)},
                           {"classes", cls}});
    }
    return out;
}

} // namespace wpl
