#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import fixtures
import numpy as np
from oslo_config import cfg
from oslo_config import fixture as config_fixture
import testtools

from xxnet import conf  # noqa


CONF = cfg.CONF


class TestCase(testtools.TestCase):
    """Test case base class for all unit tests."""

    def setUp(self):
        super(TestCase, self).setUp()
        self.useFixture(fixtures.NestedTempfile())
        self.conf = self.useFixture(config_fixture.Config(CONF)).conf
        self.tempdir = self.useFixture(fixtures.TempDir()).path

    def flags(self, **kw):
        """Override flag variables for a test."""
        for k, v in kw.items():
            self.conf.set_override(k, v)

    def assertAllClose(self, expected, actual, atol=1e-10, rtol=0.0):
        np.testing.assert_allclose(actual, expected, atol=atol, rtol=rtol)

    def assertRaisesXX(self, exc_class, func, *args, **kwargs):
        e = self.assertRaises(exc_class, func, *args, **kwargs)
        self.assertTrue(e.msg)
        return e
