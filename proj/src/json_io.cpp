#include "pfh/json_io.hpp"

#include <stdexcept>

namespace pfh {

namespace {

Json int_json(const Int& v) {
    // Schema uses plain JSON integers for small coefficients and
    // decimal strings once a value could truncate in a 64-bit consumer.
    if (v.fits_slong_p()) return Json(static_cast<long>(v.get_si()));
    return Json(v.get_str());
}

Json coeff_array(const IntPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(int_json(c));
    return arr;
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("matrix entry coefficient must be an integer or \"p/q\" string");
}

Json rat_to_json(const Rat& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
    return Json(r.get_str());
}

}  // namespace

std::vector<std::string> default_var_names(int dim) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(dim));
    for (int j = 1; j <= dim; ++j) names.push_back("x" + std::to_string(j));
    return names;
}

Json series_report_json(const ProblemShape& shape, std::optional<long> ambient_dim) {
    Json j;
    j["n"] = shape.n;
    j["t"] = shape.t;
    Json hn = Json::array();
    for (const auto& c : h_vector(shape)) hn.push_back(int_json(c));
    j["hn"] = hn;
    j["multiplicity"] = hn_multiplicity(shape).get_str();
    j["HN"] = coeff_array(hn_numerator_from_formula(shape));
    Json betti = Json::array();
    BettiTable table = betti_table(shape);
    for (size_t N = 0; N < table.rows.size(); ++N) {
        Json row;
        row["N"] = N;
        Json summands = Json::array();
        for (const auto& s : table.rows[N]) {
            Json rec;
            rec["xdeg"] = s.x_twist;
            rec["ydeg"] = s.y_twist;
            rec["mult"] = s.multiplicity.get_str();
            summands.push_back(rec);
        }
        row["summands"] = summands;
        betti.push_back(row);
    }
    j["betti"] = betti;
    if (ambient_dim) {
        HilbertSeries ambient{IntPolynomial::constant(1), *ambient_dim};
        HilbertSeries hs = hilbert_series(shape, ambient);
        Json series;
        series["numerator"] = coeff_array(hs.numerator);
        series["denom_power"] = hs.denom_power;
        j["series"] = series;
    }
    return j;
}

Json oracle_report_json(const OracleReport& report) {
    Json j;
    j["n"] = report.shape.n;
    j["t"] = report.shape.t;
    j["ambient_dim"] = report.ambient_dim;
    j["seed"] = report.seed;
    j["generic"] = report.generic;
    j["codim"] = report.codim;
    Json num = Json::array();
    for (const auto& c : report.hilbert_numerator.coeffs()) num.push_back(c.get_str());
    j["hilbert_numerator"] = num;
    j["matches_theorem"] = report.matches_theorem;
    j["redraws"] = report.redraws;
    return j;
}

Json generators_json(const AlmostAlternatingMatrix& rho, const IdealGenerators& gens) {
    Json j;
    j["n"] = rho.shape().n;
    j["t"] = rho.shape().t;
    j["ambient_dim"] = rho.ambient_dim();
    auto names = default_var_names(rho.ambient_dim());
    Json arr = Json::array();
    for (const auto& r : gens.records) {
        Json rec;
        rec["columns"] = r.column_subset;
        rec["degree"] = r.degree;
        rec["zero"] = r.is_zero;
        rec["pfaffian"] = r.pfaffian.str(names);
        arr.push_back(rec);
    }
    j["generators"] = arr;
    return j;
}

AlmostAlternatingMatrix matrix_from_json(const Json& j) {
    ProblemShape shape{j.at("n").get<long>(), j.at("t").get<long>()};
    shape.validate();
    const auto& vars = j.at("vars");
    int dim = static_cast<int>(vars.size());
    const auto& rows = j.at("entries");
    if (rows.size() != static_cast<size_t>(shape.n))
        throw std::invalid_argument("entries must have n rows");
    std::vector<std::vector<LinearForm>> entries;
    for (const auto& row : rows) {
        if (row.size() != static_cast<size_t>(shape.n + shape.t))
            throw std::invalid_argument("entries rows must have n+t columns");
        std::vector<LinearForm> out_row;
        for (const auto& cell : row) {
            if (cell.size() != static_cast<size_t>(dim))
                throw std::invalid_argument("each entry must list one coefficient per variable");
            LinearForm f;
            for (const auto& c : cell) f.coeffs.push_back(rat_from_json(c));
            out_row.push_back(std::move(f));
        }
        entries.push_back(std::move(out_row));
    }
    // The constructor validates skew-symmetry of the X block.
    return AlmostAlternatingMatrix(shape, dim, std::move(entries));
}

Json matrix_to_json(const AlmostAlternatingMatrix& rho) {
    Json j;
    j["n"] = rho.shape().n;
    j["t"] = rho.shape().t;
    j["vars"] = default_var_names(rho.ambient_dim());
    Json rows = Json::array();
    for (long i = 0; i < rho.shape().n; ++i) {
        Json row = Json::array();
        for (long c = 0; c < rho.shape().n + rho.shape().t; ++c) {
            Json cell = Json::array();
            for (const auto& coeff : rho.entry(i, c).coeffs) cell.push_back(rat_to_json(coeff));
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j;
}

}  // namespace pfh
