#include "solvquot/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "solvquot/dsl.hpp"

namespace solvquot {

using nlohmann::ordered_json;

nlohmann::ordered_json result_json(const ActionSpec& spec, const QuotientPresentation& q,
                                   const VerifyReport* checks) {
    ordered_json j;
    j["schema"] = kSchemaId;
    if (spec.field.is_rationals())
        j["field"] = "Q";
    else
        j["field"] = "Fp " + std::to_string(spec.field.characteristic());
    j["c"] = q.epoch.den->to_string();
    j["weight"] = spec.character_to_string(q.epoch.weight);
    j["b"] = dsl::localized_to_string(q.b);
    j["b_images"] = ordered_json::array();
    for (const auto& bi : q.b_images) j["b_images"].push_back(dsl::localized_to_string(bi));
    ordered_json slices;
    slices["u"] = ordered_json::array();
    for (const auto& ui : q.u) slices["u"].push_back(dsl::localized_to_string(ui));
    slices["s"] = ordered_json::array();
    slices["s_inverse"] = ordered_json::array();
    for (const auto& sj : q.s) {
        slices["s"].push_back(dsl::localized_to_string(sj.s.elem));
        slices["s_inverse"].push_back(dsl::localized_to_string(sj.s.inverse));
    }
    j["slices"] = std::move(slices);
    j["kernel"] = ordered_json::array();
    for (const auto& k : q.kernel) j["kernel"].push_back(k.to_string());
    ordered_json pres;
    pres["vars"] = q.presentation.vars;
    pres["relations"] = ordered_json::array();
    for (const auto& r : q.presentation.relations) pres["relations"].push_back(r.to_string());
    j["presentation"] = std::move(pres);
    ordered_json ch = ordered_json::object();
    if (checks) {
        for (const char* key : {"invariance", "semi_invariance", "kernel", "reconstruction"})
            ch[key] = checks->passed(key);
    }
    j["checks"] = std::move(ch);
    return j;
}

std::string emit_json(const ActionSpec& spec, const QuotientPresentation& q,
                      const VerifyReport* checks) {
    return result_json(spec, q, checks).dump(2) + "\n";
}

std::string emit_text(const ActionSpec& spec, const QuotientPresentation& q) {
    std::ostringstream out;
    out << "field: " << (spec.field.is_rationals()
                             ? std::string("Q")
                             : "Fp " + std::to_string(spec.field.characteristic()))
        << "\n";
    out << "c = " << q.epoch.den->to_string() << "   (weight "
        << spec.character_to_string(q.epoch.weight) << ")\n";
    out << "b = pi(c) = " << dsl::localized_to_string(q.b) << "\n";
    for (int k = 0; k < spec.n(); ++k)
        out << "pi(" << spec.table->name(spec.base_vars[k])
            << ") = " << dsl::localized_to_string(q.b_images[k]) << "\n";
    out << "additive slices u = [";
    for (size_t i = 0; i < q.u.size(); ++i)
        out << (i ? ", " : "") << dsl::localized_to_string(q.u[i]);
    out << "]\n";
    out << "torus slices s = [";
    for (size_t i = 0; i < q.s.size(); ++i)
        out << (i ? ", " : "") << dsl::localized_to_string(q.s[i].s.elem);
    out << "]\n";
    out << "kernel generators (cleared): [";
    for (size_t i = 0; i < q.kernel.size(); ++i)
        out << (i ? ", " : "") << q.kernel[i].to_string();
    out << "]\n";
    out << "presentation: K[";
    for (size_t i = 0; i < q.presentation.vars.size(); ++i)
        out << (i ? ", " : "") << q.presentation.vars[i];
    out << "] / (";
    for (size_t i = 0; i < q.presentation.relations.size(); ++i)
        out << (i ? ", " : "") << q.presentation.relations[i].to_string();
    out << ")\n";
    return out.str();
}

std::vector<std::pair<std::string, std::string>> builtin_examples() {
    return {
        {"weitzenboeck.sq",
         "# Weitzenboeck-type Ga-action on Q[x,y,w]\n"
         "field Q\n"
         "vars x y w\n"
         "unipotent z1\n"
         "map x = x + y*z1\n"
         "map y = y\n"
         "map w = w + x*z1 + (1/2)*y*z1^2\n"},
        {"charp_slice.sq",
         "# Local slice of degree p in characteristic 2\n"
         "field Fp 2\n"
         "vars x y\n"
         "unipotent z1\n"
         "map x = x + y*z1 + z1^2\n"
         "map y = y\n"},
        {"shear.sq",
         "# Shear: x1 -> x1 + x2 z, x2 fixed\n"
         "field Q\n"
         "vars x1 x2\n"
         "unipotent z1\n"
         "map x1 = x1 + x2*z1\n"
         "map x2 = x2\n"},
        {"gm_scaling.sq",
         "# One-dimensional torus scaling both coordinates\n"
         "field Q\n"
         "vars x1 x2\n"
         "torus t1\n"
         "map x1 = t1*x1\n"
         "map x2 = t1*x2\n"},
        {"ga_gm.sq",
         "# Mixed solvable action, l = m = 1\n"
         "field Q\n"
         "vars x y u\n"
         "unipotent z1\n"
         "torus t1\n"
         "char z1 = 1\n"
         "map x = t1*x + t1*y*z1\n"
         "map y = t1*y\n"
         "map u = u\n"},
        {"axb.sq",
         "# The ax+b group acting on the line\n"
         "field Q\n"
         "vars x\n"
         "unipotent z1\n"
         "torus t1\n"
         "char z1 = t1\n"
         "map x = t1*x + z1\n"},
    };
}

} // namespace solvquot
