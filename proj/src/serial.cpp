#include "ipoly/serial.hpp"

#include <sstream>
#include <stdexcept>

namespace ipoly::serial {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(csv_split(line));
    }
    return rows;
}

// ---- coefficient lists ----------------------------------------------------

json coeffs_to_json(const RatPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

RatPoly coeffs_from_json(const json& j) {
    std::vector<GaussRat> c;
    for (const auto& e : j) c.push_back(GaussRat::parse(e.get<std::string>()));
    return RatPoly(std::move(c));
}

std::string coeffs_to_csv(const RatPoly& p) {
    std::string out = "k,coeff\n";
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        out += std::to_string(k) + "," + csv_escape(c[k].str()) + "\n";
    return out;
}

RatPoly coeffs_from_csv(const std::string& text) {
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].size() < 2 || rows[0][0] != "k")
        throw std::invalid_argument("coeffs_from_csv: missing header");
    std::vector<GaussRat> c;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto k = static_cast<std::size_t>(std::stoul(rows[r][0]));
        if (k >= c.size()) c.resize(k + 1);
        c[k] = GaussRat::parse(rows[r][1]);
    }
    return RatPoly(std::move(c));
}

// ---- zeros records ----------------------------------------------------------

json zeros_to_json(const std::vector<ZerosRecord>& recs) {
    json arr = json::array();
    for (const auto& rec : recs) {
        json roots = json::array();
        for (std::size_t i = 0; i < rec.roots.size(); ++i) {
            roots.push_back({{"re", rec.roots[i].real().str()},
                             {"im", rec.roots[i].imag().str()},
                             {"residual", rec.residuals[i].str()},
                             {"region", rec.regions[i]},
                             {"on_boundary", static_cast<bool>(rec.on_boundary[i])}});
        }
        arr.push_back({{"n", rec.n},
                       {"m", rec.m},
                       {"degree", rec.degree},
                       {"converged", rec.converged},
                       {"iterations", rec.iterations},
                       {"roots", roots}});
    }
    return arr;
}

std::vector<ZerosRecord> zeros_from_json(const json& j, mpfr_prec_t prec) {
    std::vector<ZerosRecord> recs;
    for (const auto& e : j) {
        ZerosRecord rec;
        rec.n = e.at("n").get<unsigned>();
        rec.m = e.at("m").get<unsigned>();
        rec.degree = e.at("degree").get<unsigned>();
        rec.converged = e.at("converged").get<bool>();
        rec.iterations = e.at("iterations").get<unsigned>();
        for (const auto& r : e.at("roots")) {
            rec.roots.emplace_back(BigFloat::from_string(r.at("re").get<std::string>(), prec),
                                   BigFloat::from_string(r.at("im").get<std::string>(), prec));
            rec.residuals.push_back(BigFloat::from_string(r.at("residual").get<std::string>(), prec));
            rec.regions.push_back(r.at("region").get<std::string>());
            rec.on_boundary.push_back(r.at("on_boundary").get<bool>());
        }
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::string zeros_to_csv(const std::vector<ZerosRecord>& recs) {
    std::string out = "n,m,index,re,im,residual,region,on_boundary,converged,iterations\n";
    for (const auto& rec : recs) {
        for (std::size_t i = 0; i < rec.roots.size(); ++i) {
            out += std::to_string(rec.n) + "," + std::to_string(rec.m) + "," + std::to_string(i) +
                   "," + rec.roots[i].real().str() + "," + rec.roots[i].imag().str() + "," +
                   rec.residuals[i].str() + "," + rec.regions[i] + "," +
                   (rec.on_boundary[i] ? "1" : "0") + "," + (rec.converged ? "1" : "0") + "," +
                   std::to_string(rec.iterations) + "\n";
        }
    }
    return out;
}

std::vector<ZerosRecord> zeros_from_csv(const std::string& text, mpfr_prec_t prec) {
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].empty() || rows[0][0] != "n")
        throw std::invalid_argument("zeros_from_csv: missing header");
    std::vector<ZerosRecord> recs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r];
        if (f.size() < 10) throw std::invalid_argument("zeros_from_csv: short row");
        unsigned n = static_cast<unsigned>(std::stoul(f[0]));
        if (recs.empty() || recs.back().n != n) {
            recs.push_back({});
            recs.back().n = n;
            recs.back().m = static_cast<unsigned>(std::stoul(f[1]));
            recs.back().converged = f[8] == "1";
            recs.back().iterations = static_cast<unsigned>(std::stoul(f[9]));
        }
        auto& rec = recs.back();
        rec.roots.emplace_back(BigFloat::from_string(f[3], prec), BigFloat::from_string(f[4], prec));
        rec.residuals.push_back(BigFloat::from_string(f[5], prec));
        rec.regions.push_back(f[6]);
        rec.on_boundary.push_back(f[7] == "1");
        rec.degree = static_cast<unsigned>(rec.roots.size());
    }
    return recs;
}

// ---- curves ------------------------------------------------------------------

json curve_to_json(const CurveSamples& cs) {
    json pts = json::array();
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        pts.push_back({{"theta", cs.parameter[i].str()},
                       {"re", cs.points[i].real().str()},
                       {"im", cs.points[i].imag().str()}});
    }
    return {{"name", cs.name}, {"points", pts}};
}

CurveSamples curve_from_json(const json& j, mpfr_prec_t prec) {
    CurveSamples cs;
    cs.name = j.at("name").get<std::string>();
    for (const auto& p : j.at("points")) {
        cs.parameter.push_back(BigFloat::from_string(p.at("theta").get<std::string>(), prec));
        cs.points.emplace_back(BigFloat::from_string(p.at("re").get<std::string>(), prec),
                               BigFloat::from_string(p.at("im").get<std::string>(), prec));
    }
    return cs;
}

std::string curve_to_csv(const CurveSamples& cs) {
    std::string out = "index,name,theta,re,im\n";
    for (std::size_t i = 0; i < cs.points.size(); ++i) {
        out += std::to_string(i) + "," + csv_escape(cs.name) + "," + cs.parameter[i].str() + "," +
               cs.points[i].real().str() + "," + cs.points[i].imag().str() + "\n";
    }
    return out;
}

CurveSamples curve_from_csv(const std::string& text, mpfr_prec_t prec) {
    auto rows = csv_parse(text);
    if (rows.empty() || rows[0].empty() || rows[0][0] != "index")
        throw std::invalid_argument("curve_from_csv: missing header");
    CurveSamples cs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& f = rows[r];
        if (f.size() < 5) throw std::invalid_argument("curve_from_csv: short row");
        cs.name = f[1];
        cs.parameter.push_back(BigFloat::from_string(f[2], prec));
        cs.points.emplace_back(BigFloat::from_string(f[3], prec), BigFloat::from_string(f[4], prec));
    }
    return cs;
}

}  // namespace ipoly::serial
