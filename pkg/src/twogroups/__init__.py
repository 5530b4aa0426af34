"""Finite group-groupoids (2-groups) and crossed modules over finite groups."""
from .config import (AlgebraError, CapExceeded, Config, InternalError, ValidationError, config,
                     using)
from .groups import (FiniteGroup, GroupHom, Subgroup, automorphism_group, commutator_subgroup,
                     cyclic, dihedral, direct_product, klein4, symmetric, trivial_group,
                     validate_hom)
from .gpgd import (GpGdMorphism, GroupGroupoid, NatTransf, SubGroupGroupoid, abelianization,
                   commutator_subgpgd, discrete_gpgd, export_dot, horizontal_comp, is_isomorphic,
                   make_morphism, make_nat_transf, make_subgpgd, pair_gpgd, validate_gpgd,
                   vertical_comp, zero_gpgd)
from .xmod import (CrossedModule, Derivation, actor_xmod, derivations, regular_derivations,
                   validate_xmod, whitehead_mul)
from .actor import (actor_data, actor_gpgd, actor_tower, center_gpgd, inner_outer_actor,
                    inner_phi, is_abelian, is_complete)
from .bridge import (BridgeReport, phi_to_xmod, psi_to_gpgd, roundtrip_check,
                     verify_actor_corollary, verify_isoact)
from .actions import (GpGdAction, characteristic_iff_hol_normal, conjugation_action, holomorph,
                      identity_action, internal_semidirect, is_characteristic, is_gpgd_xmod,
                      make_action, semidirect_gpgd, trivial_action, verify_extension)
from .catalog import build, build_gpgd, build_group, build_xmod, catalog
from .textio import Workspace, WorkspaceError, parse_workspace
