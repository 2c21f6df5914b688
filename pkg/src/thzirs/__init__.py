"""Wideband THz link simulator: beam split, TD hybrid precoding, IRS deployments."""

from .errors import (ConfigError, DegenerateGeometryError, InvalidParameterError,
                     NotConfiguredError, SingularChannelError, ThzirsError,
                     UnsupportedStructureError)
from .grid_geom import (SPEED_OF_LIGHT, ArrayGeometry, FrequencyGrid, LinkAngles,
                        Scene, far_field_check, half_wavelength, link_angles,
                        link_angles_many, subcarrier_frequencies)
from .irs import (IrsDeployment, IrsPanel, configure_for_scene, configure_phases,
                  deployment_scheme, quantize_phases)
from .metrics import (beam_leakage, hardware_power, incident_element_powers,
                      reflecting_leakage, relative_subcarrier_gain,
                      spectral_efficiency)
from .precoder import (TdPrecoder, TdStructure, TdStructureKind, analog_weights_at,
                       broadening_delays, convergence_delays, digital_weights,
                       ps_only_precoder, ps_steering_phases)
from .runner import DEFAULTS, SCENARIOS, run_scenario, validate_config
from .wavefield import (BeamPattern, GainProfile, array_response,
                        array_response_many, beam_pattern, cascaded_gain,
                        default_angle_grid, gain_profile, steering_vector)

__version__ = "0.1.0"
