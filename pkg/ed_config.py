import logging
import os


class EdConfig:

    """ Config keys and default values """
    LOGS_DIR_KEY = "LOGS_DIR"
    LOGS_DIR_DEFAULT = "logs/"
    LOG_LEVEL_KEY = "LOG_LEVEL"
    LOG_LEVEL_DEFAULT = "INFO"
    MAX_EXPONENT_KEY = "MAX_EXPONENT"
    MAX_EXPONENT_DEFAULT = 2 ** 16
    SEARCH_BOUND_KEY = "SEARCH_BOUND"
    SEARCH_BOUND_DEFAULT = 64
    NSIMPLE_MAX_KEY = "NSIMPLE_MAX"
    NSIMPLE_MAX_DEFAULT = 3
    COEFF_BOUND_KEY = "COEFF_BOUND"
    COEFF_BOUND_DEFAULT = 12
    MAX_REDUCTION_STEPS_KEY = "MAX_REDUCTION_STEPS"
    MAX_REDUCTION_STEPS_DEFAULT = 10000
    SWEEP_WORKERS_KEY = "SWEEP_WORKERS"
    SWEEP_WORKERS_DEFAULT = 1
    SWEEP_COUNT_KEY = "SWEEP_COUNT"
    SWEEP_COUNT_DEFAULT = 200
    REPORT_INDENT_KEY = "REPORT_INDENT"
    REPORT_INDENT_DEFAULT = 2

    def __init__(self, config_file="elemdiv.conf", required=False):
        self.config_file = config_file
        self.required = required
        self.config_data = {}
        self.load_config()

    def load_config(self):
        """Load configuration from the key = value file, if present"""
        self.config_data = {}

        if not os.path.exists(self.config_file):
            if self.required:
                raise FileNotFoundError(f"Configuration file '{self.config_file}' not found")
            return

        with open(self.config_file, 'r') as f:
            for line in f:
                line = line.strip()

                if not line or line.startswith('#'):
                    continue

                if '#' in line:
                    line = line[:line.index('#')].strip()

                if '=' in line:
                    key, value = line.split('=', 1)
                    key = key.strip()
                    value = value.strip()

                    if key and value:
                        self.config_data[key] = value

    def get(self, key, default=None):
        """Get configuration value by key"""
        return self.config_data.get(key, default)

    def get_bool(self, key, default=False):
        """Get configuration value as boolean"""
        value = self.get(key)
        if value is None:
            return default
        return value.lower() in ('true', '1', 'yes', 'on')

    def _converted(self, key, default, convert):
        value = self.get(key)
        if value is None:
            return default
        try:
            return convert(value)
        except ValueError:
            logging.getLogger("elemdiv").warning(
                f"{self.config_file}: {key} = {value!r} is not a {convert.__name__}, using {default}")
            return default

    def get_int(self, key, default=0):
        return self._converted(key, default, int)

    def get_float(self, key, default=0.0):
        return self._converted(key, default, float)

    def has_key(self, key):
        """Check if configuration key exists"""
        return key in self.config_data

    def get_all(self):
        """Get all configuration data as dictionary"""
        return self.config_data.copy()

    def reload(self):
        """Reload configuration from file"""
        self.load_config()

    # Typed shortcuts for the keys the library consults.

    def max_exponent(self):
        return self.get_int(self.MAX_EXPONENT_KEY, self.MAX_EXPONENT_DEFAULT)

    def search_bound(self):
        return self.get_int(self.SEARCH_BOUND_KEY, self.SEARCH_BOUND_DEFAULT)

    def nsimple_max(self):
        return self.get_int(self.NSIMPLE_MAX_KEY, self.NSIMPLE_MAX_DEFAULT)

    def coeff_bound(self):
        return self.get_int(self.COEFF_BOUND_KEY, self.COEFF_BOUND_DEFAULT)

    def max_reduction_steps(self):
        return self.get_int(self.MAX_REDUCTION_STEPS_KEY, self.MAX_REDUCTION_STEPS_DEFAULT)

    def report_indent(self):
        return self.get_int(self.REPORT_INDENT_KEY, self.REPORT_INDENT_DEFAULT)


_ed_config = None

def get_config():
    """Get singleton EdConfig instance"""
    global _ed_config
    if _ed_config is None:
        _ed_config = EdConfig()
    return _ed_config


def set_config_file(config_file):
    """Replace the singleton with one loaded from an explicitly named file."""
    global _ed_config
    _ed_config = EdConfig(config_file=config_file, required=True)
    return _ed_config
