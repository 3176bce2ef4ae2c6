#include "ulfo/params.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ulfo {

SystemParams SystemParams::typical() {
    return SystemParams{
        .TJ = 6.4,
        .D = 1.0,
        .KL = 0.03,
        .TW = 1.5,
        .KP2 = 3.36,
        .Ty = 0.2,
        .KP1 = 1.7,
        .KI1 = 1.2,
        .bP = 0.04,
    };
}

const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names{"TJ",  "D",   "KL",  "TW", "KP2",
                                                "Ty",  "KP1", "KI1", "bP"};
    return names;
}

namespace {
double* field_ptr(SystemParams& p, const std::string& name) {
    if (name == "TJ") return &p.TJ;
    if (name == "D") return &p.D;
    if (name == "KL") return &p.KL;
    if (name == "TW") return &p.TW;
    if (name == "KP2") return &p.KP2;
    if (name == "Ty") return &p.Ty;
    if (name == "KP1") return &p.KP1;
    if (name == "KI1") return &p.KI1;
    if (name == "bP") return &p.bP;
    throw std::invalid_argument("unknown parameter name: " + name);
}
}  // namespace

double get_param(const SystemParams& p, const std::string& name) {
    return *field_ptr(const_cast<SystemParams&>(p), name);
}

void set_param(SystemParams& p, const std::string& name, double value) {
    *field_ptr(p, name) = value;
}

std::vector<std::string> check_params(const SystemParams& p) {
    std::vector<std::string> errs;
    auto positive = [&](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            errs.push_back(std::string(name) + " must be > 0");
    };
    auto nonneg = [&](double v, const char* name) {
        if (!(v >= 0.0) || !std::isfinite(v))
            errs.push_back(std::string(name) + " must be >= 0");
    };
    positive(p.TJ, "TJ");
    positive(p.TW, "TW");
    positive(p.Ty, "Ty");
    positive(p.KP2, "KP2");
    positive(p.KI1, "KI1");
    nonneg(p.bP, "bP");
    nonneg(p.KP1, "KP1");
    nonneg(p.D, "D");
    nonneg(p.KL, "KL");
    if (!(1.0 + p.KP1 * p.bP > 0.0))
        errs.push_back("1 + KP1*bP must be > 0");
    return errs;
}

const SystemParams& validate_params(const SystemParams& p) {
    auto errs = check_params(p);
    if (errs.empty()) return p;
    std::ostringstream msg;
    msg << "invalid parameters:";
    for (const auto& e : errs) msg << "\n  " << e;
    throw std::invalid_argument(msg.str());
}

SystemParams params_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("parameter file is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("parameter file must be a JSON object");

    const auto& names = param_names();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(names.begin(), names.end(), it.key()) == names.end())
            throw std::invalid_argument("unknown parameter key: " + it.key());
    }
    SystemParams p{};
    for (const auto& name : names) {
        if (!j.contains(name))
            throw std::invalid_argument("missing parameter key: " + name);
        if (!j[name].is_number())
            throw std::invalid_argument("parameter " + name + " must be numeric");
        set_param(p, name, j[name].get<double>());
    }
    return p;
}

SystemParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open parameter file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return params_from_json_text(buf.str());
}

}  // namespace ulfo
