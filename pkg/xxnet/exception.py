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

"""xxnet base exception handling.

Every error the library raises derives from XXNetException; the command
line turns them into machine-readable JSON and a non-zero exit status.
"""

from oslo_log import log as logging

from xxnet.i18n import _


LOG = logging.getLogger(__name__)


class XXNetException(Exception):
    """Base xxnet exception.

    To correctly use this class, inherit from it and define a 'msg_fmt'
    property. That msg_fmt will get printf'd with the keyword arguments
    provided to the constructor.
    """
    msg_fmt = _("An unknown exception occurred.")
    code = 1

    def __init__(self, message=None, **kwargs):
        self.kwargs = kwargs

        if not message:
            try:
                message = self.msg_fmt % kwargs
            except KeyError:
                # kwargs doesn't match a variable in the message
                LOG.exception('Exception in string format operation')
                for name, value in kwargs.items():
                    LOG.error("%(name)s: %(value)s",
                              {'name': name, 'value': value})
                message = self.msg_fmt

        self.msg = str(message)
        super(XXNetException, self).__init__(self.msg)

    def to_dict(self):
        details = {}
        for name, value in self.kwargs.items():
            if isinstance(value, (int, float, str, bool)):
                details[name] = value
            else:
                details[name] = str(value)
        return {'error': self.__class__.__name__,
                'message': self.msg,
                'details': details}


class Invalid(XXNetException):
    msg_fmt = _("Unacceptable parameters.")
    code = 2


class InvalidChainSize(Invalid):
    msg_fmt = _("Chain size must be a positive integer, got %(n)s.")


class InvalidSector(Invalid):
    msg_fmt = _("Sector k=%(k)s is outside [0, %(n)s].")


class InvalidSite(Invalid):
    msg_fmt = _("Invalid site pair (%(i)s, %(j)s) for a chain of %(n)s "
                "spins; expected 1 <= i < j <= N.")


class InvalidRange(Invalid):
    msg_fmt = _("Invalid range: %(reason)s")


class InvalidBasisConfig(Invalid):
    msg_fmt = _("Invalid basis configuration %(config)s for N=%(n)s, "
                "k=%(k)s.")


class InvalidDensityMatrix(Invalid):
    msg_fmt = _("Invalid two-qubit density matrix: %(reason)s")


class InvalidEdgeList(Invalid):
    msg_fmt = _("Malformed edge list: %(reason)s")


class NotRational(Invalid):
    msg_fmt = _("Value %(value)s is not a representable rational number "
                "greater than one.")


class NonPositiveValues(Invalid):
    msg_fmt = _("Log-log fit requires strictly positive sizes and values.")


class DegenerateField(XXNetException):
    msg_fmt = _("Field B=%(b)s coincides with the level crossing "
                "B_%(k)s of the N=%(n)s chain; the ground state is "
                "degenerate there.")


class InvalidFieldForSector(Invalid):
    msg_fmt = _("Field B=%(b)s does not lie inside the region of sector "
                "k=%(k)s (N=%(n)s).")


class DegenerateGroundState(XXNetException):
    msg_fmt = _("Lowest eigenvalue of sector k=%(k)s (N=%(n)s) is "
                "degenerate within %(tol)s.")


class StateSizeExceeded(XXNetException):
    msg_fmt = _("Sector N=%(n)s, k=%(k)s holds %(size)s configurations, "
                "above the cap of %(cap)s.")


class UndefinedDistribution(XXNetException):
    msg_fmt = _("Node %(node)s is isolated; its weight distribution is "
                "undefined.")


class EmptyDistribution(XXNetException):
    msg_fmt = _("Wasserstein distance needs two non-empty samples.")


class InsufficientData(XXNetException):
    msg_fmt = _("Not enough data: %(reason)s")


class PeaksNotFound(XXNetException):
    msg_fmt = _("Requested %(wanted)s peaks but only %(found)s were "
                "found.")


class LabelPropagationNotConverged(XXNetException):
    msg_fmt = _("Label propagation did not converge after %(sweeps)s "
                "sweeps; oscillating nodes: %(nodes)s.")


class OracleMismatch(XXNetException):
    msg_fmt = _("Free-fermion results deviate from the brute-force oracle "
                "by %(deviation)s (tolerance %(tol)s) at N=%(n)s, "
                "k=%(k)s.")
    code = 3
