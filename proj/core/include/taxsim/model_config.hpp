#ifndef TAXSIM_MODEL_CONFIG_HPP
#define TAXSIM_MODEL_CONFIG_HPP

#include <string>

namespace taxsim {

enum class SensitivityKind { EquilibriumValues, EquilibriumDerivatives, SimplifiedRational };
enum class RateKind { Constant, Dynamic };
enum class DiffusionKind { NonDegenerate, Degenerate, Constant };
enum class DenominatorForm { Section2, AppendixB };
enum class RemodelingKind { TissueDriven, CellDriven };
enum class ProliferationKind { Standard, Anoikis, AcidityDependent };
enum class RepellentTarget { ProliferatingCells, Acidity };
enum class ModelFamily { Full, SimplifiedAnalysis };

/// All rate constants and variant selectors of the invasion model.
///
/// lambda0/gamma0 double as the constant switch rates (RateKind::Constant)
/// and, for gamma0, as the amplitude of the dynamic MPT rate
/// (RateKind::Dynamic). mu doubles as the baseline proliferation rate and
/// as mu0 of the acidity-dependent law.
struct ModelConfig {
    // core rates
    double D_c = 0.001;
    double xi1 = 0.4;
    double xi2 = 0.1;
    double k_D = 1.0;
    double mu = 0.1;
    double mu_v = 0.15;
    double delta = 0.3;

    // phenotype switch rates
    double lambda0 = 0.01;
    double gamma0 = 0.002;

    // dynamic-rate parameters
    double b = 2.0;
    double p_shape = 2.0;
    double mu_y = 2.0;
    double mu_zeta = 2.0;
    double sigma_y = 0.5;
    double sigma_zeta = 0.3;
    double y_ref = 0.6;

    // acidity variant
    double D_h = 0.07;
    double alpha_h = 0.55;
    double beta_h = 0.05;
    double h_T_exponent = 6.4; // threshold proton concentration 10^-6.4

    // simplified analysis model
    double c1 = 1.0;
    double c2 = 0.05;
    double eta1 = 1.0;
    double alpha_s = 0.3;
    double beta_s = 0.3;

    // variant selectors
    SensitivityKind sensitivity_kind = SensitivityKind::EquilibriumDerivatives;
    RateKind rate_kind = RateKind::Constant;
    DiffusionKind diffusion_kind = DiffusionKind::NonDegenerate;
    DenominatorForm denominator_form = DenominatorForm::Section2;
    RemodelingKind remodeling_kind = RemodelingKind::TissueDriven;
    ProliferationKind proliferation_kind = ProliferationKind::Standard;
    RepellentTarget repellent_target = RepellentTarget::ProliferatingCells;
    ModelFamily model_family = ModelFamily::Full;

    bool has_acidity() const { return repellent_target == RepellentTarget::Acidity; }

    /// Throws ConfigError when a rate constant is negative, k_D <= 0,
    /// or a dynamic-rate width is non-positive.
    void validate() const;

    /// Named parameter override (`--set key=value`); selector keys accept
    /// their enum value spelled as a string. Throws ConfigError on unknown
    /// keys or unparsable values.
    void set_parameter(const std::string& key, const std::string& value);

    bool operator==(const ModelConfig&) const = default;
};

std::string to_string(SensitivityKind k);
std::string to_string(RateKind k);
std::string to_string(DiffusionKind k);
std::string to_string(DenominatorForm k);
std::string to_string(RemodelingKind k);
std::string to_string(ProliferationKind k);
std::string to_string(RepellentTarget k);
std::string to_string(ModelFamily k);

} // namespace taxsim

#endif
