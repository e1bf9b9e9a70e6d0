"""
API Views - JSON endpoints for coverage tests, character sums and thresholds
"""
import logging

from django.http import JsonResponse
from django.views.decorators.http import require_http_methods

from core.services.analysis_service import AnalysisService

logger = logging.getLogger(__name__)

analysis_service = AnalysisService()


class BadParameter(ValueError):
    pass


def _int_param(request, name, required=True):
    raw = request.GET.get(name)
    if raw is None or raw == '':
        if required:
            raise BadParameter(f"Missing parameter '{name}'")
        return None
    try:
        return int(raw)
    except ValueError:
        raise BadParameter(f"Parameter '{name}' must be an integer, got {raw!r}")


def _members_param(request):
    raw = request.GET.get('set')
    if not raw:
        return None
    try:
        return [int(part) for part in raw.split(',') if part.strip()]
    except ValueError:
        raise BadParameter(f"Parameter 'set' must be comma-separated integers, got {raw!r}")


def _error(message, status=400):
    return JsonResponse({'status': 'error', 'message': message}, status=status)


@require_http_methods(["GET"])
def cover(request):
    """Coverage report for C_m + C_k over F_q"""
    try:
        q = _int_param(request, 'q')
        m = _int_param(request, 'm')
        k = _int_param(request, 'k')
        if m <= 1 or k <= 1:
            return _error(f"m and k must be > 1, got {m}, {k}")

        result, error = analysis_service.cover(q, m, k)
        if error:
            return _error(str(error))

        report = result['report']
        return JsonResponse({
            'status': 'success',
            'field': str(result['spec']),
            'm': result['m'],
            'k': result['k'],
            'report': report.to_dict(),
        })
    except BadParameter as e:
        return _error(str(e))
    except Exception as e:
        logger.exception(f"cover failed: {e}")
        return _error(str(e), status=500)


@require_http_methods(["GET"])
def charsum(request):
    """Exact S(d; q, A) for A = C_m or an explicit set"""
    try:
        q = _int_param(request, 'q')
        d = _int_param(request, 'd')
        m = _int_param(request, 'm', required=False)
        members = _members_param(request)
        if (m is None) == (members is None):
            return _error("Give exactly one of 'm' or 'set'")
        if m is not None and m <= 1:
            return _error(f"m must be > 1, got {m}")

        report, error = analysis_service.charsum(q, d, m=m, members=members)
        if error:
            return _error(str(error))

        return JsonResponse({'status': 'success', 'report': report.to_dict()})
    except BadParameter as e:
        return _error(str(e))
    except Exception as e:
        logger.exception(f"charsum failed: {e}")
        return _error(str(e), status=500)


@require_http_methods(["GET"])
def bound(request):
    """Field order beyond which the character sum bound is positive"""
    try:
        set_size = _int_param(request, 'set_size')
        if set_size < 1:
            return _error(f"set_size must be >= 1, got {set_size}")

        result, error = analysis_service.bound(set_size)
        if error:
            return _error(str(error))

        return JsonResponse({'status': 'success', **result})
    except BadParameter as e:
        return _error(str(e))


@require_http_methods(["GET"])
def health_check(request):
    """API health check"""
    return JsonResponse({
        'status': 'healthy',
        'service': 'PotentSums API',
        'version': '1.0.0'
    })
