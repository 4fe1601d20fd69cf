#include "chordarc/curve_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chordarc/errors.hpp"

namespace chordarc {

using nlohmann::json;

Curve read_curve_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("curve file is not valid JSON: ") + e.what());
    }
    try {
        const int dim = doc.at("dimension").get<int>();
        const bool smooth = doc.value("smooth_sampling", true);
        std::vector<std::vector<Vec>> lists;
        std::vector<bool> closed;
        for (const auto& comp : doc.at("components")) {
            closed.push_back(comp.value("closed", true));
            std::vector<Vec> verts;
            for (const auto& v : comp.at("vertices")) {
                Vec p = v.get<Vec>();
                if (static_cast<int>(p.size()) != dim)
                    throw ParseError("vertex dimension disagrees with header dimension");
                verts.push_back(std::move(p));
            }
            lists.push_back(std::move(verts));
        }
        return build_curve(lists, closed, smooth);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed curve file: ") + e.what());
    }
}

Curve load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_curve_json(ss.str());
}

std::string write_curve_json(const Curve& curve) {
    json doc;
    doc["dimension"] = curve.dimension();
    doc["smooth_sampling"] = curve.smooth_sampling();
    doc["components"] = json::array();
    for (int ci = 0; ci < curve.component_count(); ++ci) {
        const auto& c = curve.component(ci);
        json jc;
        jc["closed"] = c.closed;
        json verts = json::array();
        for (int i = 0; i < c.nverts; ++i) {
            const auto v = c.vertex(i, curve.dimension());
            verts.push_back(std::vector<double>(v.begin(), v.end()));
        }
        jc["vertices"] = std::move(verts);
        doc["components"].push_back(std::move(jc));
    }
    return doc.dump(2);
}

void save_curve_file(const Curve& curve, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write curve file: " + path);
    out << write_curve_json(curve) << "\n";
}

}  // namespace chordarc
