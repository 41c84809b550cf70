#include "btzharvest/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>

#include "btzharvest/errors.hpp"

namespace btzharvest {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void check_key(const std::string& key) {
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw DomainError("unknown configuration key '" + key + "'");
    }
}

double to_number(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw DomainError("configuration key '" + key + "' expects a number, got '" + text + "'");
    }
    return value;
}

int to_integer(const std::string& key, const std::string& text) {
    const double v = to_number(key, text);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw DomainError("configuration key '" + key + "' expects an integer, got '" + text + "'");
    }
    return static_cast<int>(v);
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "l_over_sigma", "mass",       "zeta",          "gap_sigma",    "dA_over_sigma",
        "dAB_over_sigma", "delta_phi", "lambda_tilde", "axis.name",    "axis.scale",
        "axis.min",     "axis.max",   "axis.count",    "quad.rel_tol", "quad.abs_tol",
        "quad.tail_tol", "quad.n_max_images"};
    return keys;
}

ConfigValues parse_config(std::istream& in) {
    ConfigValues out;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw DomainError("config line " + std::to_string(number) + ": expected 'key = value'");
        }
        const std::string key(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (value.empty()) throw DomainError("config line " + std::to_string(number) + ": empty value");
        try {
            set_config_value(out, key, value);
        } catch (const DomainError& e) {
            throw DomainError("config line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

ConfigValues load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    return parse_config(in);
}

void set_config_value(ConfigValues& values, const std::string& key, const std::string& value) {
    check_key(key);
    values[key] = value;
}

ExperimentPoint point_from(const ConfigValues& values) {
    ExperimentPoint p;
    for (const std::string& name : parameter_names()) {
        if (auto it = values.find(name); it != values.end()) set_parameter(p, name, to_number(name, it->second));
    }
    return p;
}

QuadratureSettings quadrature_from(const ConfigValues& values) {
    QuadratureSettings q;
    auto number = [&](const char* key, double& field) {
        if (auto it = values.find(key); it != values.end()) field = to_number(key, it->second);
    };
    number("quad.rel_tol", q.rel_tol);
    number("quad.abs_tol", q.abs_tol);
    number("quad.tail_tol", q.tail_tol);
    if (auto it = values.find("quad.n_max_images"); it != values.end()) {
        q.n_max_images = to_integer("quad.n_max_images", it->second);
    }
    validate(q);
    return q;
}

SweepSpec sweep_spec_from(const ConfigValues& values) {
    auto required = [&](const char* key) -> const std::string& {
        auto it = values.find(key);
        if (it == values.end()) throw DomainError(std::string("sweep needs '") + key + "'");
        return it->second;
    };
    SweepSpec spec;
    spec.axis.name = required("axis.name");
    spec.axis.min = to_number("axis.min", required("axis.min"));
    spec.axis.max = to_number("axis.max", required("axis.max"));
    spec.axis.count = to_integer("axis.count", required("axis.count"));
    if (auto it = values.find("axis.scale"); it != values.end()) {
        if (it->second == "linear") {
            spec.axis.scale = AxisScale::linear;
        } else if (it->second == "log") {
            spec.axis.scale = AxisScale::log;
        } else {
            throw DomainError("axis.scale must be 'linear' or 'log'");
        }
    }
    for (const std::string& name : parameter_names()) {
        if (auto it = values.find(name); it != values.end()) spec.fixed[name] = to_number(name, it->second);
    }
    spec.quadrature = quadrature_from(values);
    validate(spec);
    return spec;
}

}  // namespace btzharvest
