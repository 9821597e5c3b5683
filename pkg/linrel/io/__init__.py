from linrel.io.document import (RELATION_BUILDERS, RelationDocument, emit_relation, emit_star,
                                load_document, load_params, params_from_dict, params_to_dict,
                                parse_document)
from linrel.io.report import make_report
