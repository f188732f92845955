# SPDX-License-Identifier: Apache-2.0

import json

from ._core import *  # noqa: F401,F403
from ._core import Error, simulate_json


def simulate(**kwargs):
    return json.loads(simulate_json(**kwargs))


__all__ = [name for name in dir() if not name.startswith("_")]
