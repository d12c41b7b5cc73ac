"""Preset run configurations behind the `reproduce` subcommand.

Each figure maps to a tuple of output files, and every file is described by
a subcommand plus a config written in the same key=value language the CLI
accepts, so reproduction exercises exactly the ordinary code paths. Panels
whose parameter values the source figures leave implicit (the per-zone risk
levels and the transition-panel punishment values) use one representative
point per zone: p_r = 0.1 (zone III), 0.6 (zone II), 0.9 (zone I), with
s_alpha = 0.3 and s_beta = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

P_R_AXIS = "p_r:0.0:1.0:101"
S_AXIS = "s:1.05:5.05:81"
SALPHA_AXIS = "s_alpha:0.0:1.0:21"
SBETA_AXIS = "s_beta:0.0:2.0:41"
ZONE_P_R = (("III", 0.1), ("II", 0.6), ("I", 0.9))


@dataclass(frozen=True)
class PresetFile:
    filename: str
    command: str
    config: str


def _cfg(**pairs) -> str:
    return "".join(f"{key} = {value}\n" for key, value in pairs.items())


def _pr_scan(s_alpha: float, **extra) -> str:
    return _cfg(regime="peer", commitments="true", compare="true",
                s_alpha=s_alpha, s_beta=1.0, axis=P_R_AXIS, **extra)


def _panel_pair(figure: str, letters: str, fallback: bool):
    """Transition-graph and stationary-table files for six zone panels."""
    files = []
    for offset, commitments in ((0, True), (3, False)):
        for k, (_, p_r) in enumerate(ZONE_P_R):
            letter = letters[offset + k]
            tag = "commit" if commitments else "nocommit"
            base = f"{figure}{letter}_{tag}_pr{p_r}"
            cfg = _cfg(regime="peer",
                       commitments="true" if commitments else "false",
                       fallback_safe="true" if fallback and commitments
                       else "false",
                       s_alpha=0.3, s_beta=1.0, p_r=p_r)
            files.append(PresetFile(f"{base}.dot", "transitions", cfg))
            files.append(PresetFile(f"{base}_stationary.csv", "stationary",
                                    cfg))
    return tuple(files)


FIGURES: dict[str, tuple[PresetFile, ...]] = {
    "fig1": (
        PresetFile("fig1_zones.csv", "zones",
                   _cfg(axis=S_AXIS, axis2=P_R_AXIS)),
    ),
    "fig2": (
        PresetFile("fig2a_commit_vs_nocommit_salpha0.3.csv", "sweep",
                   _pr_scan(0.3)),
        PresetFile("fig2b_commit_vs_nocommit_salpha1.0.csv", "sweep",
                   _pr_scan(1.0)),
    ),
    "fig3": _panel_pair("fig3", "abcdef", fallback=False),
    "fig4": tuple(
        PresetFile(f"fig4_zone{zone}_pr{p_r}.csv", "sweep",
                   _cfg(regime="peer", commitments="true", compare="true",
                        p_r=p_r, axis=SALPHA_AXIS, axis2=SBETA_AXIS,
                        outputs="unsafe_frequency"))
        for zone, p_r in ZONE_P_R
    ),
    "fig5": tuple(
        PresetFile(f"fig5_{row}_sbeta{s_beta}.csv", "sweep",
                   _cfg(regime="institutional", commitments="true",
                        compare="true", s_beta=s_beta, axis=S_AXIS,
                        axis2=P_R_AXIS, outputs="unsafe_frequency"))
        for row, s_beta in (("top", 1.0), ("bottom", 0.5))
    ),
    "figA1": tuple(
        PresetFile(f"figA1_beta{beta}_salpha{s_alpha}.csv", "sweep",
                   _pr_scan(s_alpha, beta=beta))
        for beta in (0.1, 10.0) for s_alpha in (0.3, 1.0)
    ),
    "figA2": tuple(
        PresetFile(f"figA2_beta{beta}_zone{zone}_pr{p_r}.csv", "sweep",
                   _cfg(regime="peer", commitments="true", beta=beta,
                        p_r=p_r, axis=SALPHA_AXIS, axis2=SBETA_AXIS,
                        outputs="unsafe_frequency"))
        for beta in (0.1, 10.0) for zone, p_r in ZONE_P_R
    ),
    "figA3": tuple(
        PresetFile(f"figA3{letter}_fallback_salpha{s_alpha}.csv", "sweep",
                   _pr_scan(s_alpha, fallback_safe="true"))
        for letter, s_alpha in (("a", 0.3), ("b", 1.0))
    ),
    "figA4": _panel_pair("figA4", "abcdef", fallback=True),
}
