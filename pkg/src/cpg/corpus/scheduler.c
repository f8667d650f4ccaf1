/* Priority scheduler; the dispatch step still uses a switch statement. */

struct Task {
    int id;
    int priority;
    int remaining;
    int state;
    struct Task *next;
};

struct Scheduler {
    struct Task *ready;
    struct Task *done;
    int clock;
    int switches;
};

void sched_init(struct Scheduler *s) {
    s->ready = NULL;
    s->done = NULL;
    s->clock = 0;
    s->switches = 0;
}

void sched_insert(struct Scheduler *s, struct Task *t) {
    struct Task *cur = s->ready;
    if (cur == NULL || t->priority > cur->priority) {
        t->next = cur;
        s->ready = t;
        return;
    }
    while (cur->next != NULL && cur->next->priority >= t->priority) {
        cur = cur->next;
    }
    t->next = cur->next;
    cur->next = t;
}

struct Task *sched_pop(struct Scheduler *s) {
    struct Task *t = s->ready;
    if (t != NULL) {
        s->ready = t->next;
        t->next = NULL;
    }
    return t;
}

int sched_step(struct Scheduler *s, int slice) {
    struct Task *t = sched_pop(s);
    int used;
    if (t == NULL) {
        return 0;
    }
    s->switches = s->switches + 1;
    switch (t->state) {
        case 0: t->state = 1; break;
        case 1: break;
        default: t->state = 2;
    }
    used = t->remaining < slice ? t->remaining : slice;
    t->remaining = t->remaining - used;
    s->clock = s->clock + used;
    if (t->remaining > 0) {
        if (t->priority > 0) {
            t->priority = t->priority - 1;
        }
        sched_insert(s, t);
    } else {
        t->state = 3;
        t->next = s->done;
        s->done = t;
    }
    return used;
}

int sched_run(struct Scheduler *s, int slice) {
    int steps = 0;
    while (sched_step(s, slice) > 0) {
        steps = steps + 1;
    }
    return steps;
}

int sched_finished(struct Scheduler *s) {
    int n = 0;
    struct Task *t;
    for (t = s->done; t != NULL; t = t->next) {
        n = n + 1;
    }
    return n;
}

struct Task *task_new(int id, int priority, int work) {
    struct Task *t = malloc(40);
    t->id = id;
    t->priority = priority;
    t->remaining = work;
    t->state = 0;
    t->next = NULL;
    return t;
}
