"""
Run configuration: argparse flags, optional JSON file, environment.

Flags override file values; a flag for one unit of a quantity replaces every
unit of that quantity from the file. All physical values are normalized to
atomic units here.
"""

import os
import json
import math
import argparse
import hashlib
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from hydrogenic.constants import CONSTANTS
from hydrogenic.states import MAX_Z, AtomicState
from utils.error_handler import (ConfigError, ConflictingUnitsError, InvalidValueError, QuantumNumberError,
                                 UnknownKeyError)

logger = logging.getLogger(__name__)

MODES = ("shift", "scan", "quantized", "oracle", "two-photon-preset")
DEFAULT_INTENSITY_W_M2 = 1.0e4
DEFAULT_DAMPING = 1.0e-3

FREQUENCY_KEYS = ("omega_au", "lambda_nm", "omega_hz")
INTENSITY_KEYS = ("intensity", "intensity_au")


@dataclass(frozen=True)
class RunConfig:
    mode: str
    state: str = "1S"
    m: int = 0
    z: int = 1
    omega_au: Optional[float] = None
    intensity_au: float = 0.0
    transition: Optional[str] = None
    scan: Optional[Tuple[float, float, int, str]] = None
    n_photons: Optional[int] = None
    volume_au: Optional[float] = None
    damping: float = DEFAULT_DAMPING
    basis_kind: Optional[str] = None
    basis_n: Optional[int] = None
    box_radius: Optional[float] = None
    theta: Optional[float] = None
    format: str = "csv"
    out: Optional[str] = None
    threads: Optional[int] = None
    log_level: Optional[str] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ConfigError(f"Unknown mode '{self.mode}'", key='mode', value=self.mode)

    def atomic_state(self) -> AtomicState:
        return AtomicState.from_label(self.state, Z=self.z, m=self.m)

    def fingerprint(self) -> str:
        """sha256 of the normalized configuration, excluding where output goes"""
        payload = {key: value for key, value in asdict(self).items() if key not in ("out", "threads", "log_level")}
        return hashlib.sha256(json.dumps(payload, sort_keys=True).encode("utf-8")).hexdigest()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="run_acstark",
        description="AC Stark shift, ionization rate and cross section of hydrogen-like ions in circular light")
    parser.add_argument('--config', help='JSON file with flat keys mirroring the flags')
    parser.add_argument('--state', help='reference state label, e.g. 1S or 2S')
    parser.add_argument('--m', type=int, help='magnetic quantum number of the reference state')
    parser.add_argument('--z', type=int, help=f'nuclear charge, 1..{MAX_Z}')
    parser.add_argument('--omega-au', type=float, help='photon energy in hartree')
    parser.add_argument('--lambda-nm', type=float, help='vacuum wavelength in nm')
    parser.add_argument('--omega-hz', type=float, help='laser frequency in Hz')
    parser.add_argument('--intensity', type=float, help='intensity in W/m^2')
    parser.add_argument('--intensity-au', type=float, help='intensity in atomic units')
    parser.add_argument('--transition', help='two-photon transition, e.g. 1S-2S')
    parser.add_argument('--two-photon', action='store_true', default=None,
                        help='tune to half the transition energy and report both levels')
    parser.add_argument('--scan', nargs=3, metavar=('START', 'STOP', 'COUNT'), help='frequency grid in hartree')
    parser.add_argument('--spacing', choices=['linear', 'log'], help='scan grid spacing')
    parser.add_argument('--n-photons', type=int, help='photon number of the quantized mode')
    parser.add_argument('--volume-au', type=float, help='quantization volume in bohr^3')
    parser.add_argument('--oracle', action='store_true', default=None, help='run the time-dependent oracle')
    parser.add_argument('--damping', type=float, help='oracle switching rate eps in atomic units')
    parser.add_argument('--basis-kind', choices=['bspline', 'sturmian'], help='radial basis family')
    parser.add_argument('--basis-n', type=int, help='number of radial basis functions')
    parser.add_argument('--box-radius', type=float, help='radial box size in bohr')
    parser.add_argument('--theta', type=float, help='complex scaling angle for open channels')
    parser.add_argument('--format', choices=['csv', 'json'], help='output format')
    parser.add_argument('--out', help='output file (stdout when omitted)')
    parser.add_argument('--log-level', help='logging level')
    return parser


FLAG_KEYS = {action.dest for action in build_parser()._actions if action.dest not in ('help', 'config')}


def _load_file(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read config file: {e}", key='config', value=path) from e
    if not isinstance(data, dict):
        raise ConfigError("Config file must hold a JSON object", key='config', value=path)
    unknown = sorted(set(data) - FLAG_KEYS)
    if unknown:
        raise UnknownKeyError(f"Unknown configuration key(s): {', '.join(unknown)}", key=unknown[0])
    return data


def _merge(file_values: Dict[str, Any], flag_values: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(file_values)
    for family in (FREQUENCY_KEYS, INTENSITY_KEYS):
        if any(flag_values.get(key) is not None for key in family):
            for key in family:
                merged.pop(key, None)
    merged.update({key: value for key, value in flag_values.items() if value is not None})
    return merged


def _single(values: Dict[str, Any], family: Sequence[str], name: str) -> Optional[str]:
    present = [key for key in family if values.get(key) is not None]
    if len(present) > 1:
        raise ConflictingUnitsError(f"{name} given in more than one unit: {', '.join(present)}", key=present[1],
                                    value=values[present[1]])
    return present[0] if present else None


def _positive(values: Dict[str, Any], key: str, allow_zero: bool = False) -> Optional[float]:
    value = values.get(key)
    if value is None:
        return None
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be a number", key=key, value=value)
    if number < 0 or (number == 0 and not allow_zero):
        raise InvalidValueError(f"{key} must be {'non-negative' if allow_zero else 'positive'}", key=key,
                                value=value)
    return number


def _integer(values: Dict[str, Any], key: str, default: Optional[int] = None) -> Optional[int]:
    value = values.get(key)
    if value is None:
        return default
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{key} must be an integer", key=key, value=value)
    return value


def _scaling_angle(values: Dict[str, Any]) -> Optional[float]:
    theta = _positive(values, 'theta', allow_zero=True)
    if theta is not None and theta >= math.pi / 4:
        raise ConfigError("theta must lie in [0, pi/4)", key='theta', value=theta)
    return theta


def _frequency(values: Dict[str, Any]) -> Optional[float]:
    key = _single(values, FREQUENCY_KEYS, "Frequency")
    if key is None:
        return None
    number = _positive(values, key)
    if key == 'lambda_nm':
        return CONSTANTS.wavelength_nm_to_omega(number)
    if key == 'omega_hz':
        return CONSTANTS.hz_to_omega(number)
    return number


def _intensity(values: Dict[str, Any]) -> Tuple[float, bool]:
    key = _single(values, INTENSITY_KEYS, "Intensity")
    if key is None:
        return CONSTANTS.to_atomic('intensity', DEFAULT_INTENSITY_W_M2), False
    number = _positive(values, key, allow_zero=True)
    return (number if key == 'intensity_au' else CONSTANTS.to_atomic('intensity', number)), True


def _mode(values: Dict[str, Any]) -> str:
    requested = []
    if values.get('scan') is not None:
        requested.append('scan')
    if values.get('n_photons') is not None:
        requested.append('quantized')
    if values.get('oracle'):
        requested.append('oracle')
    if values.get('two_photon') or values.get('transition') is not None:
        requested.append('two-photon-preset')
    if len(requested) > 1:
        raise ConfigError(f"Choose one mode, got {', '.join(requested)}", key='mode', value=requested)
    return requested[0] if requested else 'shift'


def _scan(values: Dict[str, Any]) -> Tuple[float, float, int, str]:
    raw = values['scan']
    if not isinstance(raw, (list, tuple)) or len(raw) != 3:
        raise ConfigError("scan needs START STOP COUNT", key='scan', value=raw)
    try:
        start, stop, count = float(raw[0]), float(raw[1]), int(raw[2])
    except (TypeError, ValueError):
        raise ConfigError("scan needs numeric START STOP COUNT", key='scan', value=raw)
    if start <= 0 or stop <= 0:
        raise InvalidValueError("Scan frequencies must be positive", key='scan', value=raw)
    if count < 2 or stop <= start:
        raise ConfigError("Scan needs count >= 2 and stop > start", key='scan', value=raw)
    spacing = values.get('spacing') or 'linear'
    if spacing not in ('linear', 'log'):
        raise ConfigError("spacing must be linear or log", key='spacing', value=spacing)
    return start, stop, count, spacing


def _threads() -> Optional[int]:
    raw = os.getenv('ACSTARK_THREADS')
    if raw in (None, ''):
        return None
    try:
        threads = int(raw)
    except ValueError:
        raise ConfigError("ACSTARK_THREADS must be an integer", key='ACSTARK_THREADS', value=raw)
    if threads < 1:
        raise InvalidValueError("ACSTARK_THREADS must be positive", key='ACSTARK_THREADS', value=raw)
    return threads


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """
    Build a RunConfig from command-line flags and an optional JSON file.

    Raises:
        ConfigError (exit 2): malformed or out-of-range settings, including Z > 11
        UnknownKeyError (exit 3): unrecognized key in the JSON file
        ConflictingUnitsError (exit 4): the same quantity in two units
        InvalidValueError (exit 5): negative intensity or non-positive physical values
    """
    args = build_parser().parse_args(argv)
    file_values = _load_file(args.config) if args.config else {}
    flag_values = {key: value for key, value in vars(args).items() if key != 'config'}
    values = _merge(file_values, flag_values)

    mode = _mode(values)
    omega = _frequency(values)
    intensity, intensity_given = _intensity(values)

    z = values.get('z', 1)
    if not isinstance(z, int) or not 1 <= z <= MAX_Z:
        raise ConfigError(f"Nuclear charge must lie in 1..{MAX_Z}", key='z', value=z)

    settings: Dict[str, Any] = {
        'mode': mode,
        'state': str(values.get('state') or '1S'),
        'm': _integer(values, 'm', default=0),
        'z': z,
        'omega_au': omega,
        'intensity_au': intensity,
        'damping': _positive(values, 'damping') or DEFAULT_DAMPING,
        'basis_kind': values.get('basis_kind'),
        'basis_n': _integer(values, 'basis_n'),
        'box_radius': _positive(values, 'box_radius'),
        'theta': _scaling_angle(values),
        'format': values.get('format') or 'csv',
        'out': values.get('out'),
        'threads': _threads(),
        'log_level': values.get('log_level'),
    }
    if settings['format'] not in ('csv', 'json'):
        raise ConfigError("format must be csv or json", key='format', value=settings['format'])
    if settings['basis_kind'] not in (None, 'bspline', 'sturmian'):
        raise ConfigError("basis_kind must be bspline or sturmian", key='basis_kind', value=settings['basis_kind'])
    if settings['basis_n'] is not None and settings['basis_n'] < 10:
        raise ConfigError("basis_n must be at least 10", key='basis_n', value=settings['basis_n'])

    if mode == 'scan':
        settings['scan'] = _scan(values)
        if omega is not None:
            raise ConfigError("A scan takes its frequencies from the grid", key='omega_au', value=omega)
    elif mode == 'two-photon-preset':
        settings['transition'] = str(values.get('transition') or '1S-2S')
        if omega is not None:
            raise ConfigError("The two-photon preset derives the frequency from the transition",
                              key='omega_au', value=omega)
    elif omega is None:
        raise ConfigError("A photon frequency is required (--omega-au, --lambda-nm or --omega-hz)",
                          key='omega_au')

    if mode == 'quantized':
        n_photons = values['n_photons']
        if isinstance(n_photons, float) and n_photons.is_integer():
            n_photons = int(n_photons)
        if isinstance(n_photons, bool) or not isinstance(n_photons, int) or n_photons < 0:
            raise InvalidValueError("n_photons must be a non-negative integer", key='n_photons', value=n_photons)
        volume = _positive(values, 'volume_au')
        if volume is not None and intensity_given:
            raise ConflictingUnitsError("Give either the mode volume or the intensity, not both",
                                        key='volume_au', value=volume)
        if volume is None:
            if intensity <= 0 or n_photons == 0:
                raise InvalidValueError("Mode volume cannot be derived; pass --volume-au", key='volume_au')
            volume = n_photons * omega * CONSTANTS.c_au / intensity
        settings['n_photons'] = n_photons
        settings['volume_au'] = volume

    try:
        config = RunConfig(**settings)
        config.atomic_state()
    except QuantumNumberError as e:
        raise ConfigError(e.message, key=e.details.get('field'), value=e.details.get('value')) from e

    logger.debug("Run configuration %s (%s)", config, config.fingerprint()[:12])
    return config
