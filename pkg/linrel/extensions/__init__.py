from linrel.extensions.build_extension import EXTENSIONS, build_extension
from linrel.extensions.deficiency import deficiency_index, deficiency_space
from linrel.extensions.extend import (DecompositionReport, ExtensionParams, decompose_extension,
                                      extend_semibounded, params_from_part, positive_extension_qn,
                                      symmetric_extension_vn, verify_semibounded_extension)
