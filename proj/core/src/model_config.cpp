#include "taxsim/model_config.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "taxsim/errors.hpp"

namespace taxsim {

namespace {

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError("invalid numeric value '" + value + "' for parameter '" + key + "'");
    }
    return out;
}

template <class Enum>
Enum parse_enum(const std::string& key, const std::string& value,
                const std::map<std::string, Enum>& table) {
    auto it = table.find(value);
    if (it == table.end()) {
        std::string allowed;
        for (const auto& [name, _] : table) {
            if (!allowed.empty()) allowed += "|";
            allowed += name;
        }
        throw ConfigError("invalid value '" + value + "' for '" + key + "' (expected " + allowed + ")");
    }
    return it->second;
}

const std::map<std::string, SensitivityKind> kSensitivity = {
    {"EquilibriumValues", SensitivityKind::EquilibriumValues},
    {"EquilibriumDerivatives", SensitivityKind::EquilibriumDerivatives},
    {"SimplifiedRational", SensitivityKind::SimplifiedRational}};
const std::map<std::string, RateKind> kRate = {{"Constant", RateKind::Constant},
                                               {"Dynamic", RateKind::Dynamic}};
const std::map<std::string, DiffusionKind> kDiffusion = {
    {"NonDegenerate", DiffusionKind::NonDegenerate},
    {"Degenerate", DiffusionKind::Degenerate},
    {"Constant", DiffusionKind::Constant}};
const std::map<std::string, DenominatorForm> kDenominator = {
    {"Section2", DenominatorForm::Section2}, {"AppendixB", DenominatorForm::AppendixB}};
const std::map<std::string, RemodelingKind> kRemodeling = {
    {"TissueDriven", RemodelingKind::TissueDriven}, {"CellDriven", RemodelingKind::CellDriven}};
const std::map<std::string, ProliferationKind> kProliferation = {
    {"Standard", ProliferationKind::Standard},
    {"Anoikis", ProliferationKind::Anoikis},
    {"AcidityDependent", ProliferationKind::AcidityDependent}};
const std::map<std::string, RepellentTarget> kRepellent = {
    {"ProliferatingCells", RepellentTarget::ProliferatingCells},
    {"Acidity", RepellentTarget::Acidity}};
const std::map<std::string, ModelFamily> kFamily = {
    {"Full", ModelFamily::Full}, {"SimplifiedAnalysis", ModelFamily::SimplifiedAnalysis}};

std::map<std::string, double ModelConfig::*> numeric_fields() {
    return {
        {"D_c", &ModelConfig::D_c},
        {"xi1", &ModelConfig::xi1},
        {"xi2", &ModelConfig::xi2},
        {"k_D", &ModelConfig::k_D},
        {"mu", &ModelConfig::mu},
        {"mu_v", &ModelConfig::mu_v},
        {"delta", &ModelConfig::delta},
        {"lambda0", &ModelConfig::lambda0},
        {"gamma0", &ModelConfig::gamma0},
        {"b", &ModelConfig::b},
        {"p_shape", &ModelConfig::p_shape},
        {"mu_y", &ModelConfig::mu_y},
        {"mu_zeta", &ModelConfig::mu_zeta},
        {"sigma_y", &ModelConfig::sigma_y},
        {"sigma_zeta", &ModelConfig::sigma_zeta},
        {"y_ref", &ModelConfig::y_ref},
        {"D_h", &ModelConfig::D_h},
        {"alpha_h", &ModelConfig::alpha_h},
        {"beta_h", &ModelConfig::beta_h},
        {"h_T_exponent", &ModelConfig::h_T_exponent},
        {"c1", &ModelConfig::c1},
        {"c2", &ModelConfig::c2},
        {"eta1", &ModelConfig::eta1},
        {"alpha_s", &ModelConfig::alpha_s},
        {"beta_s", &ModelConfig::beta_s},
    };
}

} // namespace

void ModelConfig::validate() const {
    const std::pair<const char*, double> nonnegative[] = {
        {"D_c", D_c},         {"xi1", xi1},       {"xi2", xi2},     {"mu", mu},
        {"mu_v", mu_v},       {"delta", delta},   {"lambda0", lambda0}, {"gamma0", gamma0},
        {"b", b},             {"p_shape", p_shape}, {"D_h", D_h},   {"alpha_h", alpha_h},
        {"beta_h", beta_h},   {"c1", c1},         {"c2", c2},       {"eta1", eta1},
        {"alpha_s", alpha_s}, {"beta_s", beta_s},
    };
    for (const auto& [name, value] : nonnegative) {
        if (value < 0.0) {
            throw ConfigError(std::string("model parameter ") + name + " must be nonnegative");
        }
    }
    if (!(k_D > 0.0)) {
        throw ConfigError("model parameter k_D must be positive");
    }
    if (!(sigma_y > 0.0) || !(sigma_zeta > 0.0)) {
        throw ConfigError("model parameters sigma_y and sigma_zeta must be positive");
    }
}

void ModelConfig::set_parameter(const std::string& key, const std::string& value) {
    static const auto fields = numeric_fields();
    if (auto it = fields.find(key); it != fields.end()) {
        this->*(it->second) = parse_double(key, value);
        return;
    }
    if (key == "sensitivity_kind") {
        sensitivity_kind = parse_enum(key, value, kSensitivity);
    } else if (key == "rate_kind") {
        rate_kind = parse_enum(key, value, kRate);
    } else if (key == "diffusion_kind") {
        diffusion_kind = parse_enum(key, value, kDiffusion);
    } else if (key == "denominator_form") {
        denominator_form = parse_enum(key, value, kDenominator);
    } else if (key == "remodeling_kind") {
        remodeling_kind = parse_enum(key, value, kRemodeling);
    } else if (key == "proliferation_kind") {
        proliferation_kind = parse_enum(key, value, kProliferation);
    } else if (key == "repellent_target") {
        repellent_target = parse_enum(key, value, kRepellent);
    } else if (key == "model_family") {
        model_family = parse_enum(key, value, kFamily);
    } else {
        throw ConfigError("unknown model parameter '" + key + "'");
    }
}

std::string to_string(SensitivityKind k) {
    switch (k) {
        case SensitivityKind::EquilibriumValues: return "EquilibriumValues";
        case SensitivityKind::EquilibriumDerivatives: return "EquilibriumDerivatives";
        case SensitivityKind::SimplifiedRational: return "SimplifiedRational";
    }
    return {};
}
std::string to_string(RateKind k) {
    return k == RateKind::Constant ? "Constant" : "Dynamic";
}
std::string to_string(DiffusionKind k) {
    switch (k) {
        case DiffusionKind::NonDegenerate: return "NonDegenerate";
        case DiffusionKind::Degenerate: return "Degenerate";
        case DiffusionKind::Constant: return "Constant";
    }
    return {};
}
std::string to_string(DenominatorForm k) {
    return k == DenominatorForm::Section2 ? "Section2" : "AppendixB";
}
std::string to_string(RemodelingKind k) {
    return k == RemodelingKind::TissueDriven ? "TissueDriven" : "CellDriven";
}
std::string to_string(ProliferationKind k) {
    switch (k) {
        case ProliferationKind::Standard: return "Standard";
        case ProliferationKind::Anoikis: return "Anoikis";
        case ProliferationKind::AcidityDependent: return "AcidityDependent";
    }
    return {};
}
std::string to_string(RepellentTarget k) {
    return k == RepellentTarget::ProliferatingCells ? "ProliferatingCells" : "Acidity";
}
std::string to_string(ModelFamily k) {
    return k == ModelFamily::Full ? "Full" : "SimplifiedAnalysis";
}

} // namespace taxsim
