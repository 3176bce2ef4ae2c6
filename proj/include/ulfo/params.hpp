#pragma once

#include <string>
#include <vector>

namespace ulfo {

// Physical and controller parameters of the hydropower single-machine
// single-load test system. Time constants in seconds, gains per-unit.
struct SystemParams {
    double TJ;   // generator inertia time constant (s)
    double D;    // generator damping coefficient
    double KL;   // load frequency sensitivity
    double TW;   // water flow inertia time constant (s)
    double KP2;  // servo proportional gain
    double Ty;   // servomotor time constant (s)
    double KP1;  // governor PI proportional gain
    double KI1;  // governor PI integral gain (1/s)
    double bP;   // permanent droop

    // Bundled typical parameter set for the test system.
    static SystemParams typical();
};

// Names of the nine fields in canonical order (also the parameter-file keys).
const std::vector<std::string>& param_names();

// Field access by name; throws std::invalid_argument on an unknown name.
double get_param(const SystemParams& p, const std::string& name);
void set_param(SystemParams& p, const std::string& name, double value);

// Returns one message per violated invariant, empty when p is valid.
std::vector<std::string> check_params(const SystemParams& p);

// Returns p unchanged when valid; otherwise throws std::invalid_argument
// whose message lists every violated invariant by field name.
const SystemParams& validate_params(const SystemParams& p);

// Parameter file support: a flat JSON object with exactly the nine keys
// TJ, D, KL, TW, KP2, Ty, KP1, KI1, bP. Unknown keys are rejected.
SystemParams params_from_json_text(const std::string& text);
SystemParams load_params_file(const std::string& path);

}  // namespace ulfo
