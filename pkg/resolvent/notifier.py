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

import logging
import sys

import coloredlogs


LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'
LOG_DATE_FORMAT = '%H:%M:%S'


class LoggingNotifier(object):
    """
    A single log category, a child of the package logger. Messages
    take lazy %-style arguments.
    """

    def __init__(self, logger):
        self.__logger = logger

    @property
    def logger(self):
        return self.__logger

    def info(self, message, *args):
        self.__logger.info(message, *args)
        return True

    def debug(self, message, *args):
        self.__logger.debug(message, *args)
        return True

    def warning(self, message, *args):
        self.__logger.warning(message, *args)

    def error(self, message, *args):
        self.__logger.error(message, *args)

class LoggingNotify(object):

    def __init__(self, name='resolvent', level='INFO'):
        self.__categories = {}
        self.__level = level

        # every category propagates to this logger, reports go to
        # stdout so the log stream stays on stderr...
        self.__root = logging.getLogger(name)
        self.__root.propagate = False
        self.__install()

    def __install(self):
        coloredlogs.install(level=self.__level, logger=self.__root, stream=sys.stderr,
            fmt=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)

    @property
    def level(self):
        return self.__level

    def set_level(self, level):
        self.__level = level
        self.__install()

    def new_category(self, category):
        notifier = self.__categories.get(category)
        if not notifier:
            notifier = LoggingNotifier(self.__root.getChild(category))
            self.__categories[category] = notifier

        return notifier

notify = LoggingNotify()
