# semiloc/services/base_service.py
"""
Classe base para os serviços de análise.

Este módulo define a estrutura comum dos serviços que recebem mapas
bipartidos: tolerância de trabalho, logger e as checagens de entrada
compartilhadas (completa positividade e subunitalidade).
"""

import logging
from typing import Optional

from semiloc.core.config import settings
from semiloc.core.exceptions import InvalidMatrixException, NotCompletelyPositiveException
from semiloc.models.causality_model import BipartiteMap
from semiloc.services.qmap_service import is_cp, is_subunital, min_choi_eigenvalue

# Configurar logger
logger = logging.getLogger(__name__)


class BaseService:
    """
    Classe base para serviços, fornecendo a tolerância e validações comuns.

    A tolerância de cada serviço vem da flag --tol da CLI ou, na ausência dela,
    de settings.TOL.
    """

    def __init__(self, tol: Optional[float] = None):
        """
        Inicializa o serviço com a tolerância de trabalho.

        Args:
            tol: Tolerância absoluta; padrão settings.TOL

        Raises:
            InvalidMatrixException: Se a tolerância não for positiva
        """
        self.tol = settings.TOL if tol is None else float(tol)
        if not self.tol > 0:
            raise InvalidMatrixException(detail=f"Tolerância deve ser positiva (recebido {tol})")
        self.service_name = type(self).__name__

    def _require_operation(self, m: BipartiteMap) -> None:
        """
        Garante que o mapa é uma operação: CP e subunital.

        Args:
            m: Mapa bipartido

        Raises:
            NotCompletelyPositiveException: Se a Choi tiver autovalor negativo
            InvalidMatrixException: Se E(1) exceder a identidade
        """
        if not is_cp(m.e):
            margin = min_choi_eigenvalue(m.e)
            logger.warning(f"{self.service_name}: mapa rejeitado, menor autovalor da Choi {margin:.3e}")
            raise NotCompletelyPositiveException(min_eigenvalue=margin)
        if not is_subunital(m.e, max(self.tol, settings.RANK_TOL)):
            logger.warning(f"{self.service_name}: mapa rejeitado, E(1) não é subunital")
            raise InvalidMatrixException(detail="Operação deve satisfazer E(1) ⪯ 1")
