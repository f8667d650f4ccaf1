/* FIFO queue with head and tail pointers. */

struct QNode {
    int data;
    struct QNode *next;
};

struct Queue {
    struct QNode *head;
    struct QNode *tail;
    int count;
};

void queue_init(struct Queue *q) {
    q->head = NULL;
    q->tail = NULL;
    q->count = 0;
}

int queue_put(struct Queue *q, int data) {
    struct QNode *n = malloc(16);
    if (n == NULL) {
        return 0;
    }
    n->data = data;
    n->next = NULL;
    if (q->tail == NULL) {
        q->head = n;
    } else {
        q->tail->next = n;
    }
    q->tail = n;
    q->count = q->count + 1;
    return 1;
}

int queue_take(struct Queue *q, int *data) {
    struct QNode *n = q->head;
    if (n == NULL) {
        return 0;
    }
    *data = n->data;
    q->head = n->next;
    if (q->head == NULL) {
        q->tail = NULL;
    }
    q->count = q->count - 1;
    free(n);
    return 1;
}

int queue_len(struct Queue *q) {
    return q->count;
}

int round_robin(int jobs, int quantum, int work) {
    struct Queue q;
    int remaining = 0;
    int ticks = 0;
    int i;
    queue_init(&q);
    for (i = 0; i < jobs; i = i + 1) {
        queue_put(&q, work + i);
    }
    while (queue_take(&q, &remaining)) {
        if (remaining > quantum) {
            ticks = ticks + quantum;
            queue_put(&q, remaining - quantum);
        } else {
            ticks = ticks + remaining;
        }
    }
    return ticks;
}

int josephus(int n, int k) {
    struct Queue q;
    int value = 0;
    int i;
    int last = -1;
    queue_init(&q);
    for (i = 1; i <= n; i = i + 1) {
        queue_put(&q, i);
    }
    while (queue_len(&q) > 0) {
        for (i = 1; i < k; i = i + 1) {
            queue_take(&q, &value);
            queue_put(&q, value);
        }
        queue_take(&q, &last);
    }
    return last;
}
