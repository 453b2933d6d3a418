# semiloc/services/__init__.py
"""
Módulo de serviços da biblioteca.

Este pacote contém a lógica numérica organizada por domínio: representações
de mapas CP, dilatações de Stinespring, testes de causalidade, fatoração
semilocal e o corpus de referência.
"""

# Exportar classes de serviço para facilitar importações
from semiloc.services.base_service import BaseService
from semiloc.services.causality_service import CausalityService, marginal_map_A
from semiloc.services.factorize_service import FactorizationService, reconstruct

# Exportar todos os serviços
__all__ = [
    "BaseService",
    "CausalityService",
    "FactorizationService",
    "marginal_map_A",
    "reconstruct",
]
