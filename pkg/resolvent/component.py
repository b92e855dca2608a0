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

from resolvent.notifier import notify


class ComponentError(RuntimeError):
    """
    A harness resource failed to start.
    """


class Component(object):
    """
    A resource with a lifetime bound to one harness run: the worker
    pool and the enumeration cache.
    """

    def setup(self):
        pass

    def shutdown(self):
        pass


class ComponentManager(object):
    notify = notify.new_category('ComponentManager')

    def __init__(self):
        self._components = []

    @property
    def components(self):
        return list(self._components)

    def get_component(self, component_class):
        for component in self._components:
            if isinstance(component, component_class):
                return component

        return None

    def add_component(self, component):
        assert isinstance(component, Component)
        if component in self._components:
            return component

        name = component.__class__.__name__
        self.notify.debug('Starting component: %s...', name)
        try:
            component.setup()
        except (OSError, ValueError) as e:
            raise ComponentError('Failed to start %s: %s' % (name, e)) from e

        self._components.append(component)
        return component

    def shutdown(self):
        # last started, first stopped; a failing shutdown does not
        # keep the others running
        while self._components:
            component = self._components.pop()
            self.notify.debug('Shutting down component: %s...', component.__class__.__name__)
            try:
                component.shutdown()
            except OSError as e:
                self.notify.error('Failed to shut down %s: %s', component.__class__.__name__, e)

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.shutdown()
        return False
