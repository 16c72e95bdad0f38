#include "simplex/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace simplex {

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

namespace {

void write_indent(std::ostream& os, int indent, int depth) {
    if (indent < 0) return;
    os << '\n';
    for (int i = 0; i < indent * depth; ++i) os << ' ';
}

void write_value(std::ostream& os, const Json& value, int indent, int depth) {
    switch (value.type()) {
        case nlohmann::detail::value_t::object: {
            if (value.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (const auto& item : value.items()) {
                if (!first) os << (indent < 0 ? "," : ",");
                first = false;
                write_indent(os, indent, depth + 1);
                os << Json(item.key()).dump() << (indent < 0 ? ":" : ": ");
                write_value(os, item.value(), indent, depth + 1);
            }
            write_indent(os, indent, depth);
            os << '}';
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (value.empty()) {
                os << "[]";
                return;
            }
            os << '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) os << (indent < 0 ? "," : ",");
                first = false;
                write_indent(os, indent, depth + 1);
                write_value(os, item, indent, depth + 1);
            }
            write_indent(os, indent, depth);
            os << ']';
            return;
        }
        case nlohmann::detail::value_t::number_float:
            os << format_double(value.get<double>());
            return;
        default:
            os << value.dump();
            return;
    }
}

Json vector_rows(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json point(const Vector& v) {
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Json number_list(const std::vector<double>& values) {
    Json out = Json::array();
    for (double v : values) out.push_back(v);
    return out;
}

Matrix parse_rows(const Json& rows, const std::string& what) {
    if (!rows.is_array() || rows.empty() || !rows.front().is_array())
        throw std::invalid_argument(what + " must be a non-empty array of arrays");
    const std::size_t cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
            throw std::invalid_argument(what + " rows have inconsistent lengths");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!rows[i][j].is_number())
                throw std::invalid_argument(what + " entries must be numbers");
            m(i, j) = rows[i][j].get<double>();
        }
    }
    return m;
}

Json sphere_document(const Sphere& sphere) {
    Json out;
    out["center"] = point(sphere.center);
    out["radius"] = sphere.radius;
    return out;
}

} // namespace

std::string serialize(const Json& doc, int indent) {
    std::ostringstream os;
    write_value(os, doc, indent, 0);
    return os.str();
}

Json simplex_document(const Simplex& s) {
    Json doc;
    doc["dimension"] = s.dim();
    doc["vertices"] = vector_rows(s.vertices().transpose());
    return doc;
}

Json gram_document(const Matrix& gram) {
    Json doc;
    doc["gram"] = vector_rows(gram);
    return doc;
}

Simplex parse_simplex(const Json& doc, const Tolerance& tol) {
    if (!doc.contains("vertices"))
        throw std::invalid_argument("simplex document lacks a vertices key");
    const Matrix rows = parse_rows(doc["vertices"], "vertices");
    if (doc.contains("dimension") &&
        doc["dimension"].get<int>() != static_cast<int>(rows.cols()))
        throw std::invalid_argument("declared dimension disagrees with vertex width");
    return Simplex(rows.transpose(), tol);
}

Matrix parse_gram(const Json& doc) {
    if (!doc.contains("gram"))
        throw std::invalid_argument("gram document lacks a gram key");
    const Matrix g = parse_rows(doc["gram"], "gram");
    if (g.rows() != g.cols())
        throw std::invalid_argument("gram matrix must be square");
    return g;
}

Simplex simplex_from_document(const Json& doc, const Tolerance& tol) {
    if (doc.contains("gram")) return simplex_from_gram(parse_gram(doc), tol);
    return parse_simplex(doc, tol);
}

Simplex load_simplex(const std::string& path, const Tolerance& tol) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json doc = Json::parse(in);
    return simplex_from_document(doc, tol);
}

Json center_report_document(const CenterReport& report) {
    Json doc;
    doc["centroid"] = point(report.centroid);
    doc["circumscribed"] = sphere_document(report.circumscribed);
    doc["inscribed"] = sphere_document(report.inscribed);
    Json fermat;
    fermat["point"] = point(report.fermat.point);
    fermat["mode"] =
        report.fermat.mode == FermatMode::floating ? "floating" : "absorbed";
    if (report.fermat.mode == FermatMode::absorbed)
        fermat["absorbed_vertex"] = report.fermat.absorbed_vertex;
    else
        fermat["absorbed_vertex"] = nullptr;
    fermat["residual"] = report.fermat.residual;
    fermat["iterations"] = report.fermat.iterations;
    doc["fermat_torricelli"] = std::move(fermat);
    doc["monge"] = point(report.monge);
    doc["orthocenter"] =
        report.orthocenter ? point(*report.orthocenter) : Json(nullptr);
    doc["complementary_1_centroid"] = point(report.complementary_one_centroid);
    doc["one_center"] =
        report.one_center ? sphere_document(*report.one_center) : Json(nullptr);
    Json pairs = Json::array();
    for (const auto& [a, b] : report.coincidences) pairs.push_back(Json::array({a, b}));
    doc["coincidences"] = std::move(pairs);
    return doc;
}

Json classification_document(const ClassificationReport& report) {
    Json doc;
    doc["dimension"] = report.dimension;
    doc["regular"] = report.regular;
    doc["equifacetal"] = report.equifacetal;
    doc["equiareal"] = report.equiareal;
    doc["equiradial"] = report.equiradial;
    doc["well_distributed_edges"] = report.well_distributed_edges;
    doc["isosceles_apex"] =
        report.isosceles_apex ? Json(*report.isosceles_apex) : Json(nullptr);
    doc["orthocentric"] = report.orthocentric;
    doc["facet_inradii_equal"] = report.facet_inradii_all_equal;
    doc["degenerate"] = report.degenerate;
    doc["edge_lengths"] = number_list(report.edge_lengths);
    doc["facet_volumes"] = number_list(report.facet_volumes);
    doc["facet_circumradii"] = number_list(report.facet_circumradii);
    doc["facet_inradii"] = number_list(report.facet_inradii);
    doc["facet_edge_square_sums"] = number_list(report.facet_edge_square_sums);
    doc["edge_spread"] = report.edge_spread;
    doc["facet_volume_spread"] = report.facet_volume_spread;
    doc["facet_circumradius_spread"] = report.facet_circumradius_spread;
    doc["facet_inradius_spread"] = report.facet_inradius_spread;
    doc["edge_square_sum_spread"] = report.edge_square_sum_spread;
    doc["equifacetal_mismatch"] = report.equifacetal_mismatch;
    if (!report.opposite_edge_pairs.empty()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : report.opposite_edge_pairs)
            pairs.push_back(Json::array({a, b}));
        doc["opposite_edge_pairs"] = std::move(pairs);
        doc["facet_perimeters"] = number_list(report.facet_perimeters);
    }
    return doc;
}

Json cevian_document(const CevianReport& report) {
    Json doc;
    doc["through"] = point(report.through);
    doc["coefficients"] = point(report.coefficients);
    Json feet = Json::array();
    for (const Vector& f : report.feet) feet.push_back(point(f));
    doc["feet"] = std::move(feet);
    doc["lengths"] = number_list(report.lengths);
    doc["length_spread"] = report.length_spread;
    doc["equal"] = report.equal;
    doc["structure_r"] = report.structure_r ? Json(*report.structure_r) : Json(nullptr);
    return doc;
}

Json verification_document(const VerificationRun& run) {
    Json doc;
    doc["theorem_id"] = run.suite;
    doc["seed"] = run.seed;
    doc["samples"] = run.samples;
    Json tolerance;
    tolerance["abs"] = run.tolerance.abs;
    tolerance["rel"] = run.tolerance.rel;
    doc["tolerance"] = std::move(tolerance);
    doc["verdict"] = run.pass ? "pass" : "fail";
    Json checks = Json::array();
    for (const Check& c : run.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["relation"] = c.relation;
        entry["value"] = c.value;
        entry["limit"] = c.limit;
        entry["passed"] = c.passed;
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    return doc;
}

} // namespace simplex
