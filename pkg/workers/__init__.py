__all__ = ["set_eval", "elem_eval", "invariants", "normal_form", "factor", "verify_identities", "flag_homology",
           "fl_bounds", "selftest"]
