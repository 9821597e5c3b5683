from linrel.transforms.krein import (KreinComponentsReport, krein, krein_by_definition,
                                     krein_components_check)
