#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "looplight/broadening.hpp"
#include "looplight/config.hpp"
#include "looplight/constants.hpp"
#include "looplight/oracle.hpp"
#include "looplight/presets.hpp"
#include "looplight/propagation.hpp"
#include "looplight/response.hpp"

namespace py = pybind11;
using namespace looplight;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Linear and third-order probe response of a closed-loop "
              "four-level double-Lambda atomic medium";

    py::register_exception<SingularGenerator>(m, "SingularGeneratorError");
    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<StepTooCoarse>(m, "StepTooCoarseError");
    py::register_exception<InsufficientTail>(m, "InsufficientTailError");

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("omega31", &SystemParams::omega31)
        .def_readwrite("omega32", &SystemParams::omega32)
        .def_readwrite("omega42", &SystemParams::omega42)
        .def_readwrite("phi31", &SystemParams::phi31)
        .def_readwrite("phi32", &SystemParams::phi32)
        .def_readwrite("phi42", &SystemParams::phi42)
        .def_readwrite("phi41", &SystemParams::phi41)
        .def_readwrite("delta31", &SystemParams::delta31)
        .def_readwrite("delta32", &SystemParams::delta32)
        .def_readwrite("delta42", &SystemParams::delta42)
        .def_readwrite("delta41", &SystemParams::delta41)
        .def_readwrite("gamma31", &SystemParams::gamma31)
        .def_readwrite("gamma32", &SystemParams::gamma32)
        .def_readwrite("gamma41", &SystemParams::gamma41)
        .def_readwrite("gamma42", &SystemParams::gamma42)
        .def_readwrite("gammaC", &SystemParams::gammaC)
        .def("multiphoton_detuning", &SystemParams::multiphotonDetuning)
        .def("loop_phase", &SystemParams::loopPhase)
        .def("validate", &SystemParams::validate);

    py::class_<ProbeSpec>(m, "ProbeSpec")
        .def(py::init<>())
        .def_static("relative", &ProbeSpec::relative, py::arg("fraction") = 0.1)
        .def_static("absolute", &ProbeSpec::absolute, py::arg("rabi"))
        .def("resolve", &ProbeSpec::resolve);

    py::class_<FieldGeometry>(m, "FieldGeometry")
        .def(py::init<>())
        .def_readwrite("dir31", &FieldGeometry::dir31)
        .def_readwrite("dir32", &FieldGeometry::dir32)
        .def_readwrite("dir42", &FieldGeometry::dir42);

    py::class_<MediumParams>(m, "MediumParams")
        .def(py::init<>())
        .def_readwrite("density", &MediumParams::density)
        .def_readwrite("lambda41", &MediumParams::lambda41)
        .def_readwrite("temperature", &MediumParams::temperature)
        .def_readwrite("atom_mass", &MediumParams::atomMass)
        .def_readwrite("self_collision_const", &MediumParams::selfCollisionConst)
        .def_readwrite("buffer_collision_const", &MediumParams::bufferCollisionConst)
        .def_readwrite("buffer_density", &MediumParams::bufferDensity)
        .def_readwrite("field_directions", &MediumParams::fieldDirections)
        .def("probe_wavenumber", &MediumParams::probeWavenumber)
        .def("validate", &MediumParams::validate);

    m.def("dipole_moment_from_decay", &dipole_moment_from_decay,
          py::arg("gamma41"), py::arg("lambda41"));
    m.def("probe_intensity", &probe_intensity, py::arg("omega41"), py::arg("d41"));
    m.def("rabi_from_intensity", &rabi_from_intensity, py::arg("intensity"),
          py::arg("d41"), py::arg("unused") = 0.0);

    py::class_<DecomposedLiouvillian>(m, "DecomposedLiouvillian")
        .def_readonly("M0", &DecomposedLiouvillian::M0)
        .def_readonly("Mplus", &DecomposedLiouvillian::Mplus)
        .def_readonly("Mminus", &DecomposedLiouvillian::Mminus)
        .def_readonly("Sigma0", &DecomposedLiouvillian::Sigma0)
        .def_readonly("SigmaPlus", &DecomposedLiouvillian::SigmaPlus)
        .def_readonly("SigmaMinus", &DecomposedLiouvillian::SigmaMinus)
        .def("reconstruct_M", &DecomposedLiouvillian::reconstructM,
             py::arg("omega41"), py::arg("theta"))
        .def("reconstruct_Sigma", &DecomposedLiouvillian::reconstructSigma,
             py::arg("omega41"), py::arg("theta"));

    m.def("build_liouvillian", &build_liouvillian);
    m.def("component_index", &component_index, py::arg("a"), py::arg("b"));
    m.def(
        "appendix_reference",
        [](const SystemParams& p, double omega41, double t) {
            const AppendixReference r = appendix_reference(p, omega41, t);
            return py::make_tuple(r.M, r.Sigma);
        },
        py::arg("params"), py::arg("omega41"), py::arg("t"));

    py::class_<FloquetSolution>(m, "FloquetSolution")
        .def_property_readonly("max_order", &FloquetSolution::maxOrder)
        .def_property_readonly("Delta", &FloquetSolution::Delta)
        .def_property_readonly("phi", &FloquetSolution::phi)
        .def("has", &FloquetSolution::has, py::arg("n"), py::arg("m"))
        .def("coefficient", &FloquetSolution::coefficient, py::arg("n"), py::arg("m"),
             py::return_value_policy::copy)
        .def("reconstruct_state", &FloquetSolution::reconstructState,
             py::arg("omega41"), py::arg("t"));

    m.def(
        "solve_hierarchy",
        [](const DecomposedLiouvillian& L, double Delta, double phi, int maxOrder) {
            return solve_hierarchy(L, Delta, phi, {maxOrder});
        },
        py::arg("L"), py::arg("Delta"), py::arg("phi"), py::arg("max_order") = 3);
    m.def("reconstruct_coherence_41", &reconstruct_coherence_41, py::arg("solution"),
          py::arg("omega41"), py::arg("phi41"), py::arg("t"), py::arg("probe_frequency"));
    m.def("density_matrix_from_state", &density_matrix_from_state);

    py::class_<ResponseCurve>(m, "ResponseCurve")
        .def_readonly("grid", &ResponseCurve::grid)
        .def_readonly("chi1", &ResponseCurve::chi1)
        .def_readonly("chi3_scaled", &ResponseCurve::chi3Scaled)
        .def_readonly("units_note", &ResponseCurve::unitsNote)
        .def("is_gap", &ResponseCurve::isGap)
        .def("all_gaps", &ResponseCurve::allGaps)
        .def("__len__", &ResponseCurve::size);

    m.def("paper_unit", &paper_unit);
    m.def("chi1", &chi1, py::arg("solution"), py::arg("params"), py::arg("medium"));
    m.def("chi3_scaled", &chi3_scaled, py::arg("solution"), py::arg("params"),
          py::arg("medium"), py::arg("omega41"));
    m.def(
        "scan",
        [](const SystemParams& p, const ProbeSpec& probe, const MediumParams& m,
           const std::vector<double>& grid, int maxOrder, bool paperNormalized) {
            return scan(p, probe, m, grid, {maxOrder, paperNormalized});
        },
        py::arg("params"), py::arg("probe"), py::arg("medium"), py::arg("grid"),
        py::arg("max_order") = 3, py::arg("paper_normalized") = true);

    py::class_<VelocityQuadrature>(m, "VelocityQuadrature")
        .def_readonly("nodes", &VelocityQuadrature::nodes)
        .def_readonly("weights", &VelocityQuadrature::weights)
        .def_readonly("vm", &VelocityQuadrature::vm);

    m.def("most_probable_speed", &most_probable_speed, py::arg("temperature"),
          py::arg("mass"));
    m.def("doppler_linewidth_fwhm", &doppler_linewidth_fwhm, py::arg("temperature"),
          py::arg("mass"), py::arg("wavenumber"));
    m.def("collision_rate", &collision_rate, py::arg("self_density"),
          py::arg("buffer_density"), py::arg("self_const"), py::arg("buffer_const"));
    m.def(
        "mean_free_path_diagnostic",
        [](const MediumParams& med) {
            const MeanFreePathDiagnostic d = mean_free_path_diagnostic(med);
            return py::make_tuple(d.lambdaMFP ? py::cast(*d.lambdaMFP) : py::none(),
                                  d.dickeRegime);
        },
        py::arg("medium"));
    m.def("gauss_hermite_rule", &gauss_hermite_rule, py::arg("vm"), py::arg("n_nodes"));
    m.def(
        "doppler_average_scan",
        [](const SystemParams& p, const ProbeSpec& probe, const MediumParams& med,
           const std::vector<double>& grid, const VelocityQuadrature& q, int maxOrder,
           bool paperNormalized) {
            DopplerOptions o;
            o.scan = {maxOrder, paperNormalized};
            return doppler_average_scan(p, probe, med, grid, q, o);
        },
        py::arg("params"), py::arg("probe"), py::arg("medium"), py::arg("grid"),
        py::arg("quadrature"), py::arg("max_order") = 3,
        py::arg("paper_normalized") = true);

    py::class_<PropagationReport>(m, "PropagationReport")
        .def_readonly("n2I", &PropagationReport::n2I)
        .def_readonly("phase_per_meter", &PropagationReport::phasePerMeter)
        .def_readonly("Lpi", &PropagationReport::Lpi)
        .def_readonly("linear_absorption_length", &PropagationReport::linearAbsorptionLength)
        .def_readonly("nonlinear_gain_length", &PropagationReport::nonlinearGainLength)
        .def_readonly("linear_absorptive", &PropagationReport::linearAbsorptive)
        .def_readonly("nonlinear_absorptive", &PropagationReport::nonlinearAbsorptive);

    m.def("selfphase_report", &selfphase_report, py::arg("chi1"), py::arg("chi3_scaled"),
          py::arg("medium"));
    m.def("phase_after_length", &phase_after_length, py::arg("report"), py::arg("length"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("omega41", &Trajectory::omega41)
        .def_readonly("dt", &Trajectory::dt);

    m.def("max_time_step", &max_time_step, py::arg("params"), py::arg("omega41"),
          py::arg("safety_factor") = 0.05);
    m.def(
        "integrate",
        [](const SystemParams& p, const ProbeSpec& probe, double tFinal, double dt) {
            return integrate(p, probe, tFinal, dt);
        },
        py::arg("params"), py::arg("probe"), py::arg("t_final"), py::arg("dt"));
    m.def("extract_harmonics", &extract_harmonics, py::arg("trajectory"),
          py::arg("Delta"), py::arg("phi"), py::arg("m_range"), py::arg("n_periods") = 10);
    m.def("write_trajectory_csv", &write_trajectory_csv, py::arg("trajectory"),
          py::arg("path"));

    py::class_<ModelConfig>(m, "ModelConfig")
        .def_readonly("system", &ModelConfig::system)
        .def_readonly("probe", &ModelConfig::probe)
        .def_readonly("medium", &ModelConfig::medium)
        .def_readonly("gamma_units", &ModelConfig::gammaUnits);

    m.def("load_config", &load_config, py::arg("path"));
    m.def("parse_config", &parse_config, py::arg("json_text"));

    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("model", &Preset::model)
        .def_readonly("grid_start", &Preset::gridStart)
        .def_readonly("grid_stop", &Preset::gridStop)
        .def_readonly("grid_points", &Preset::gridPoints)
        .def_readonly("doppler_averaged", &Preset::dopplerAveraged)
        .def_readonly("velocity_scale", &Preset::velocityScale);

    m.def("figure_preset", &figure_preset, py::arg("name"));
    m.def("preset_names", &preset_names);
    m.def("fig4_caption_unit", &fig4_caption_unit);

    auto constants = m.def_submodule("constants");
    constants.attr("k_boltzmann") = looplight::constants::kBoltzmann;
    constants.attr("c_light") = looplight::constants::cLight;
    constants.attr("eps0") = looplight::constants::eps0;
    constants.attr("hbar") = looplight::constants::hbar;
    constants.attr("atomic_mass_unit") = looplight::constants::atomicMassUnit;
}
