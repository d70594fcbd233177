import time
import numpy as np

def display_time(time_in_seconds):
    """ Format a duration as 'Xh Ym Z.ZZs', dropping the leading zero fields """
    hrs, residual = divmod(time_in_seconds, 3600.)
    mins, secs = divmod(residual, 60.)
    if(hrs == 0):
        if(mins == 0):
            return '%.2fs' %secs
        return '%dm %.2fs' %(mins, secs)
    return '%dh %dm %.2fs' %(hrs, mins, secs)

def parse_pattern_range(kmin, kmax, step=1):
    """ Parameter values of a generated family, e.g. the k of grid-k """
    return [int(k) for k in np.arange(kmin, kmax+1, step)]

class TimerError(Exception): 
    """A custom exception used to report errors in use of Timer class""" 

class Timer: 
    """Wall-clock timer with named laps

    The summary lists every lap and, after stop(), the total elapsed time.
    """
    def __init__(self): 
        self._start_time = None
        self._prevlap_time = None
        self._laps = []
        self.summary = None

    def start(self): 
        """ Start the timer """ 
        if(self._start_time is not None): 
            raise TimerError("Timer is running. Use .stop() to stop it") 
        self._start_time = time.perf_counter()
        self._prevlap_time = self._start_time
        self._laps = []

    def lap(self, mess=None): 
        """ Register a lap and return the time elapsed since start() """
        if(self._start_time is None): 
            raise TimerError("Timer is not running. Use .start() to start it") 
        now = time.perf_counter()
        self._laps.append((now - self._prevlap_time, mess))
        self._prevlap_time = now
        return display_time(now - self._start_time)

    def stop(self, mess=''): 
        """Stop the timer, and report the elapsed time""" 
        if(self._start_time is None): 
            raise TimerError("Timer is not running. Use .start() to start it")
        elapsed_time = time.perf_counter() - self._start_time

        lines = ['\n--- TIMER SUMMARY ---']
        for i, (dt, lap_mess) in enumerate(self._laps):
            lines.append(" step %d: %s %s" %(i+1, display_time(dt), '' if lap_mess is None else '- '+str(lap_mess)))
        lines.append("Elapsed time: %s %s" %(display_time(elapsed_time), ' - '+str(mess) if mess != '' else ''))
        self.summary = '\n'.join(lines)

        self._start_time = None
        return elapsed_time
