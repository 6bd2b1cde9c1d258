#pragma once

#include <optional>
#include <string>

#include "looplight/broadening.hpp"
#include "looplight/params.hpp"

namespace looplight {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fully resolved run setup. In "gamma" units mode all rates are multiples
/// of the natural linewidth (gamma == 1 internally) and chi output is only
/// meaningful in the plot normalization; "si" mode carries absolute units.
struct ModelConfig {
    SystemParams system;
    ProbeSpec probe;
    std::optional<MediumParams> medium;
    bool gammaUnits = true;

    const MediumParams& requireMedium() const;
};

/// Parses the JSON configuration document with top-level keys
/// "units" ("gamma"|"si"), "system", "probe", "medium". Unknown keys anywhere
/// are a ConfigError, as are schema violations and invariant violations.
ModelConfig load_config(const std::string& path);
ModelConfig parse_config(const std::string& jsonText);

}  // namespace looplight
