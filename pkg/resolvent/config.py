# Copyright (c) 2026, Resolvent Lab contributors.
#
# This file is part of Resolvent Lab.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# You should have received a copy of the MIT License
# along with Resolvent Lab. If not, see <https://opensource.org/licenses/MIT>.

import os

import simplejson
import yaml
import pytoml

from resolvent.notifier import notify


class ConfigError(RuntimeError):
    """
    A configuration specific runtime error
    """

class ConfigFile(object):
    """
    A file object that represents a configuration file in memory,
    containing all of the key/value pairs read from disk...
    """

    def __init__(self, filepath):
        self._filepath = filepath
        self._data = {}

    @property
    def filepath(self):
        return self._filepath

    @property
    def data(self):
        return self._data

    def setup(self):
        """
        Reads the file values from disk if the file exists.
        """

        if os.path.exists(self._filepath):
            self.load()

    parse_errors = ()

    def load(self):
        with open(self._filepath, 'r') as io:
            try:
                data = self.handle_load(io)
            except self.parse_errors as e:
                raise ConfigError('Cannot parse config file %s: %s' % (self._filepath, e))

        if data is None:
            data = {}

        if not isinstance(data, dict):
            raise ConfigError('Config file %s must contain a table of keys!' % self._filepath)

        self._data = data

    def handle_load(self, io):
        """
        Parses the opened file and returns a dictionary.
        """

        raise NotImplementedError

class ConfigJSONFile(ConfigFile):
    parse_errors = (simplejson.JSONDecodeError,)

    def handle_load(self, io):
        return simplejson.load(io)

class ConfigYAMLFile(ConfigFile):
    parse_errors = (yaml.YAMLError,)

    def handle_load(self, io):
        return yaml.safe_load(io)

class ConfigTOMLFile(ConfigFile):
    parse_errors = (pytoml.TomlError,)

    def handle_load(self, io):
        return pytoml.load(io)

CONFIG_FILE_BACKENDS = {
    '.json': ConfigJSONFile,
    '.yaml': ConfigYAMLFile,
    '.yml': ConfigYAMLFile,
    '.toml': ConfigTOMLFile,
}

class ConfigVariables(object):
    """
    Key/default lookups over the values loaded from a config file,
    falling back to the default when the key is absent...
    """

    notify = notify.new_category('ConfigVariables')

    def __init__(self):
        self._values = {}
        self._filepath = None

    @property
    def filepath(self):
        return self._filepath

    def read_config_file(self, filepath):
        extension = os.path.splitext(filepath)[1].lower()
        file_object_handler = CONFIG_FILE_BACKENDS.get(extension)
        if not file_object_handler:
            raise ConfigError('Unsupported config file extension: %s, expected one of %s!' % (
                extension, ', '.join(sorted(CONFIG_FILE_BACKENDS))))

        if not os.path.exists(filepath):
            raise ConfigError('Cannot read config file: %s, file does not exist!' % filepath)

        file_object = file_object_handler(filepath)
        file_object.setup()

        self._values.update(file_object.data)
        self._filepath = filepath
        self.notify.debug('Loaded %d config values from %s.' % (len(file_object.data), filepath))

    def set_value(self, key, value):
        self._values[key] = value

    def clear(self):
        self._values = {}
        self._filepath = None

    def has_value(self, key):
        return key in self._values

    def get_string(self, key, default=''):
        value = self._values.get(key, default)
        return str(value)

    def get_int(self, key, default=0):
        value = self._values.get(key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            raise ConfigError('Config value %s=%r is not an integer!' % (key, value))

    def get_float(self, key, default=0.0):
        value = self._values.get(key, default)
        try:
            return float(value)
        except (TypeError, ValueError):
            raise ConfigError('Config value %s=%r is not a number!' % (key, value))

config = ConfigVariables()

if os.path.exists('config/general.toml'):
    config.read_config_file('config/general.toml')
