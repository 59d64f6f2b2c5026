"""Enumeration kernel selection.

Imports the compiled kernel when the extension built, else the pure
Python twin.  ZAGREB_KERNEL=py or =cy forces the choice; forcing cy on an
install without the extension is an error rather than a silent downgrade.
BACKEND names the one in use.
"""

from __future__ import annotations

import os

_forced = os.environ.get("ZAGREB_KERNEL", "").strip().lower()

if _forced == "py":
    from . import _corepy as _impl

    BACKEND = "py"
elif _forced == "cy":
    from . import _corecy as _impl  # type: ignore[no-redef]

    BACKEND = "cy"
elif _forced:
    raise ImportError(f"ZAGREB_KERNEL must be 'py' or 'cy', got {_forced!r}")
else:
    try:
        from . import _corecy as _impl  # type: ignore[no-redef]

        BACKEND = "cy"
    except ImportError:
        from . import _corepy as _impl

        BACKEND = "py"

scan_extremal = _impl.scan_extremal
visit_connected = _impl.visit_connected
census_masks = _impl.census_masks
